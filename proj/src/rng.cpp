#include "rqmcbet/rng.hpp"

namespace rqmcbet {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c,
                         const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * c[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * c[2];
  const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const std::uint32_t hi1 = std::uint64_t(p1) >> 32, lo1 = std::uint32_t(p1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  philox_round(ctr, key);
  for (int r = 1; r < 10; ++r) {
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
    philox_round(ctr, key);
  }
  return ctr;
}

Philox4x32::Philox4x32(std::uint64_t key, std::uint64_t stream)
    : key_{std::uint32_t(key), std::uint32_t(key >> 32)},
      stream_(stream),
      block_(0),
      buf_{},
      pos_(4) {}

Philox4x32::result_type Philox4x32::operator()() {
  if (pos_ == 4) {
    buf_ = block({std::uint32_t(block_), std::uint32_t(block_ >> 32),
                  std::uint32_t(stream_), std::uint32_t(stream_ >> 32)},
                 key_);
    ++block_;
    pos_ = 0;
  }
  return buf_[pos_++];
}

std::uint64_t Philox4x32::next_u64() {
  const std::uint64_t lo = (*this)();
  const std::uint64_t hi = (*this)();
  return lo | (hi << 32);
}

double Philox4x32::next_double() {
  return double(next_u64() >> 11) * 0x1p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t context) {
  return splitmix64(splitmix64(base) ^ context);
}

}  // namespace rqmcbet
