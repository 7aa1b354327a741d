#include "graphdep/philox.hpp"

namespace graphdep {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53;
constexpr std::uint32_t kM1 = 0xCD9E8D57;
constexpr std::uint32_t kW0 = 0x9E3779B9;
constexpr std::uint32_t kW1 = 0xBB67AE85;

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

double uniform_from_words(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi >> 5) << 26) | (lo >> 6);
  return static_cast<double>(bits) * 0x1.0p-53;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t index, std::uint32_t latent, std::uint16_t stream)
    : counter_{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), latent, stream},
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

double PhiloxStream::uniform() {
  if (used_ == 4) {
    buffer_ = Philox4x32::block(counter_, key_);
    counter_[3] += 1u << 16;
    used_ = 0;
  }
  const double u = uniform_from_words(buffer_[used_], buffer_[used_ + 1]);
  used_ += 2;
  return u;
}

}  // namespace graphdep
