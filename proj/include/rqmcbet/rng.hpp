#pragma once

#include <array>
#include <cstdint>

namespace rqmcbet {

// Philox4x32-10 counter-based generator (Salmon et al.). A (key, stream)
// pair selects an independent stream; within a stream, blocks of four
// 32-bit words are produced from a 64-bit block counter. Distinct streams
// under the same key never share a counter block, so draws are independent
// by construction.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;

  explicit Philox4x32(std::uint64_t key, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xffffffffu; }

  result_type operator()();

  std::uint64_t next_u64();

  // Uniform double in [0,1) with 53 random bits.
  double next_double();

  // One keyed block of the underlying bijection; exposed for test vectors.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_;
  std::array<std::uint32_t, 4> buf_;
  int pos_;
};

// splitmix64 step, used to derive well-dispersed seeds from structured input.
std::uint64_t splitmix64(std::uint64_t x);

// Combine a base seed with a context value (replicate index, cell id, ...).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t context);

}  // namespace rqmcbet
