#include "rqmcbet/sobol.hpp"

#include <bit>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rqmcbet/rng.hpp"

namespace rqmcbet {

int SobolGenerator::max_dimension() { return detail::kSobolTableDims; }

SobolGenerator::SobolGenerator(int dimension) : d_(dimension) {
  if (dimension < 1 || dimension > max_dimension())
    throw std::invalid_argument("SobolGenerator: dimension out of range");
  v_.resize(std::size_t(d_));
  for (int j = 0; j < d_; ++j) {
    auto& v = v_[std::size_t(j)];
    if (j == 0) {
      // Van der Corput coordinate: v_k = 2^(32-k).
      for (int k = 0; k < kSobolBits; ++k) v[std::size_t(k)] = 1u << (31 - k);
      continue;
    }
    const std::uint32_t poly = detail::kSobolPoly[j];
    const int s = 31 - std::countl_zero(poly);
    const std::uint32_t* minit = detail::kSobolMinit + detail::kSobolMinitOffset[j];
    for (int k = 0; k < s; ++k)
      v[std::size_t(k)] = minit[k] << (31 - k);
    for (int k = s; k < kSobolBits; ++k) {
      std::uint32_t vk = v[std::size_t(k - s)] ^ (v[std::size_t(k - s)] >> s);
      for (int i = 1; i < s; ++i)
        if ((poly >> (s - i)) & 1u) vk ^= v[std::size_t(k - i)];
      v[std::size_t(k)] = vk;
    }
  }
}

std::span<const std::uint32_t, kSobolBits> SobolGenerator::directions(int j) const {
  return std::span<const std::uint32_t, kSobolBits>(v_.at(std::size_t(j)));
}

std::uint32_t SobolGenerator::point_bits(std::uint64_t index, int j) const {
  const auto& v = v_[std::size_t(j)];
  std::uint32_t y = 0;
  while (index) {
    const int b = std::countr_zero(index);
    y ^= v[std::size_t(b)];
    index &= index - 1;
  }
  return y;
}

PointSet SobolGenerator::generate(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("SobolGenerator: n must be positive");
  if (std::uint64_t(n) > (std::uint64_t(1) << kSobolBits))
    throw std::invalid_argument("SobolGenerator: n exceeds 2^32");
  PointSet out;
  out.n = n;
  out.d = d_;
  out.bits.resize(std::size_t(n) * std::size_t(d_));
  for (std::int64_t i = 0; i < n; ++i)
    for (int j = 0; j < d_; ++j)
      out.bits[std::size_t(i) * std::size_t(d_) + std::size_t(j)] =
          point_bits(std::uint64_t(i), j);
  return out;
}

ScrambleState ScrambleState::draw(int d, std::uint64_t seed, std::uint64_t replicate) {
  if (d < 1) throw std::invalid_argument("ScrambleState: d must be positive");
  ScrambleState st;
  st.d = d;
  st.seed = seed;
  st.replicate = replicate;
  st.cols.resize(std::size_t(d));
  st.shift.resize(std::size_t(d));
  Philox4x32 rng(seed, replicate);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < kSobolBits; ++k) {
      const std::uint32_t diag = 1u << (31 - k);
      st.cols[std::size_t(j)][std::size_t(k)] = diag | (rng() & (diag - 1u));
    }
    st.shift[std::size_t(j)] = rng();
  }
  return st;
}

ScrambleState ScrambleState::identity(int d) {
  if (d < 1) throw std::invalid_argument("ScrambleState: d must be positive");
  ScrambleState st;
  st.d = d;
  st.cols.resize(std::size_t(d));
  st.shift.assign(std::size_t(d), 0u);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < kSobolBits; ++k)
      st.cols[std::size_t(j)][std::size_t(k)] = 1u << (31 - k);
  return st;
}

void ScrambleState::validate() const {
  if (d < 1 || cols.size() != std::size_t(d) || shift.size() != std::size_t(d))
    throw std::logic_error("ScrambleState: inconsistent sizes");
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < kSobolBits; ++k) {
      const std::uint32_t col = cols[std::size_t(j)][std::size_t(k)];
      const std::uint32_t diag = 1u << (31 - k);
      if (!(col & diag))
        throw std::logic_error("ScrambleState: zero on matrix diagonal");
      if (col & ~((diag << 1) - 1u))
        throw std::logic_error("ScrambleState: entry above the diagonal");
    }
  }
}

namespace {

inline std::uint32_t apply_scramble(std::uint32_t x,
                                    const std::array<std::uint32_t, kSobolBits>& cols,
                                    std::uint32_t shift) {
  std::uint32_t y = shift;
  while (x) {
    const int b = std::countr_zero(x);
    y ^= cols[std::size_t(31 - b)];
    x &= x - 1;
  }
  return y;
}

}  // namespace

PointSet scramble(const PointSet& pts, const ScrambleState& st) {
  if (pts.d != st.d)
    throw std::invalid_argument("scramble: dimension mismatch");
  PointSet out;
  out.n = pts.n;
  out.d = pts.d;
  out.scrambled = true;
  out.seed = st.seed;
  out.replicate = st.replicate;
  out.bits.resize(pts.bits.size());
  for (std::size_t i = 0; i < std::size_t(pts.n); ++i)
    for (std::size_t j = 0; j < std::size_t(pts.d); ++j)
      out.bits[i * std::size_t(pts.d) + j] =
          apply_scramble(pts.bits[i * std::size_t(pts.d) + j], st.cols[j],
                         st.shift[j]);
  return out;
}

void write_points_csv(const PointSet& pts, std::ostream& os) {
  for (std::int64_t i = 0; i < pts.n; ++i) {
    for (int j = 0; j < pts.d; ++j) {
      if (j) os << ',';
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", pts.value(i, j));
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace rqmcbet
