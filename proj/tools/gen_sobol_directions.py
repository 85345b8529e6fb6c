#!/usr/bin/env python3
"""Regenerate src/sobol_directions.cpp from scipy's embedded Joe-Kuo table.

scipy ships the Joe-Kuo "new-joe-kuo-6" primitive polynomials and initial
direction numbers (21201 dimensions). We embed the first NDIM dimensions:
the full binary polynomial encoding (including leading and trailing 1 bits)
and the initial m-values, one row per dimension. The generator expands the
remaining direction integers at construction time via the usual recurrence.

Usage: python3 tools/gen_sobol_directions.py > src/sobol_directions.cpp
"""

import textwrap

import numpy as np
import scipy.stats._sobol as s

NDIM = 64

poly = np.zeros(s._MAXDIM, dtype=np.uint32)
vinit = np.zeros((s._MAXDIM, s._MAXDEG), dtype=np.uint32)
s._initialize_direction_numbers(poly, vinit, dtype=np.uint32)


def emit_array(ctype, name, items):
    print(f"const {ctype} {name}[] = {{")
    for ln in textwrap.wrap(", ".join(items), 76):
        print("    " + ln)
    print("};")
    print()


print("// Generated by tools/gen_sobol_directions.py. Do not edit by hand.")
print("// Joe-Kuo primitive polynomials and initial direction numbers")
print("// (new-joe-kuo-6 table, via scipy.stats._sobol).")
print()
print('#include "rqmcbet/sobol.hpp"')
print()
print("namespace rqmcbet::detail {")
print()
print(f"const int kSobolTableDims = {NDIM};")
print()
emit_array("std::uint32_t", "kSobolPoly",
           [f"{int(poly[j])}u" for j in range(NDIM)])

degs = [1] + [int(poly[j]).bit_length() - 1 for j in range(1, NDIM)]
minit_flat = []
offsets = ["0"]
for j in range(NDIM):
    minit_flat.extend(f"{int(vinit[j, k])}u" for k in range(degs[j]))
    offsets.append(str(len(minit_flat)))
emit_array("int", "kSobolMinitOffset", offsets)
emit_array("std::uint32_t", "kSobolMinit", minit_flat)

print("}  // namespace rqmcbet::detail")
