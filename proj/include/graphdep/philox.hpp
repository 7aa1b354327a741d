#pragma once

#include <array>
#include <cstdint>

namespace graphdep {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Uniform double in [0, 1) from two 32-bit words (53 random bits).
double uniform_from_words(std::uint32_t hi, std::uint32_t lo);

/// Uniforms for one (seed, sample index, latent id, stream) address. The key
/// is the seed; the counter is (index lo, index hi, latent, block << 16 | stream),
/// and each block yields two uniforms.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t index, std::uint32_t latent, std::uint16_t stream);
  double uniform();

 private:
  Philox4x32::Counter counter_;
  Philox4x32::Key key_;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace graphdep
