#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace sparse_lad {

/// Anything that hands out uniform variates on the open interval (0, 1).
template <class R>
concept UniformSource = requires(R& r) {
  { r.uniform_open() } -> std::convertible_to<double>;
};

/// 64-bit Mersenne Twister with a draw counter. Each uniform consumes exactly
/// one engine output, so variate counts translate directly into stream
/// positions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  explicit RandomStream(std::seed_seq& seq) : engine_(seq) {}

  /// (k + 0.5) / 2^53 for the top 53 bits k of one engine output.
  double uniform_open() {
    ++draws_;
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

/// Identifies one Monte-Carlo trial. Streams are derived by feeding
/// (master low/high word, trial low/high word, stream id) through
/// std::seed_seq into a fresh std::mt19937_64.
struct TrialSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

enum class StreamId : std::uint32_t { Input = 1, Noise = 2 };

inline RandomStream make_stream(const TrialSeed& seed, StreamId id) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed.master_seed),
      static_cast<std::uint32_t>(seed.master_seed >> 32),
      static_cast<std::uint32_t>(seed.trial_index),
      static_cast<std::uint32_t>(seed.trial_index >> 32),
      static_cast<std::uint32_t>(id),
  };
  return RandomStream(seq);
}

}  // namespace sparse_lad
