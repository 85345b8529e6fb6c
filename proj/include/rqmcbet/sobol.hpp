#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace rqmcbet {

namespace detail {
// Embedded Joe-Kuo table, see src/sobol_directions.cpp.
extern const int kSobolTableDims;
extern const std::uint32_t kSobolPoly[];
extern const int kSobolMinitOffset[];
extern const std::uint32_t kSobolMinit[];
}  // namespace detail

inline constexpr int kSobolBits = 32;

// A digital-net point set at 32-bit resolution, stored row-major (n x d).
// Coordinate values are raw(i,j) / 2^32, so they lie in [0,1) exactly.
struct PointSet {
  std::int64_t n = 0;
  int d = 0;
  bool scrambled = false;
  std::uint64_t seed = 0;
  std::uint64_t replicate = 0;
  std::vector<std::uint32_t> bits;

  std::uint32_t raw(std::int64_t i, int j) const {
    return bits[std::size_t(i) * std::size_t(d) + std::size_t(j)];
  }
  double value(std::int64_t i, int j) const { return raw(i, j) * 0x1p-32; }
};

// First n points of the Sobol' sequence in natural index order (point 0 is
// the origin), for up to max_dimension() coordinates.
class SobolGenerator {
 public:
  explicit SobolGenerator(int dimension);

  int dimension() const { return d_; }
  static int max_dimension();

  // MSB-aligned direction integers v_1..v_32 of coordinate j.
  std::span<const std::uint32_t, kSobolBits> directions(int j) const;

  std::uint32_t point_bits(std::uint64_t index, int j) const;

  PointSet generate(std::int64_t n) const;

 private:
  int d_;
  std::vector<std::array<std::uint32_t, kSobolBits>> v_;
};

// Random linear scramble: per coordinate, a lower-triangular unit-diagonal
// bit matrix L (stored column-wise, most significant digit first) and a
// digital shift. A point y maps to (L y) xor shift over GF(2).
struct ScrambleState {
  int d = 0;
  std::uint64_t seed = 0;
  std::uint64_t replicate = 0;
  std::vector<std::array<std::uint32_t, kSobolBits>> cols;
  std::vector<std::uint32_t> shift;

  static ScrambleState draw(int d, std::uint64_t seed, std::uint64_t replicate);

  // Identity matrices, zero shift; maps every point to itself.
  static ScrambleState identity(int d);

  // Checks triangular shape and unit diagonals; throws std::logic_error.
  void validate() const;
};

PointSet scramble(const PointSet& pts, const ScrambleState& st);

// One row per point, one column per coordinate, full decimal precision.
void write_points_csv(const PointSet& pts, std::ostream& os);

}  // namespace rqmcbet
