#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

namespace vdkernel {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// The Philox4x32 block function with 10 rounds.
PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept;

/// Counter-based 64-bit generator. The key is the seed; the upper half of
/// the counter is the stream id (a path index), the lower half counts
/// blocks. Distinct streams never overlap, so paths can be generated in any
/// order on any number of workers.
class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    if (index_ == 2) refill();
    return buffer_[index_++];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1).
  double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  void refill() noexcept;

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int index_ = 2;
};

/// 64-bit key for stream `stream` under `seed`: the first Philox output of
/// that stream.
std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Per-path random source. Philox maps (seed, path) to a key; a Mersenne
/// Twister seeded with it generates the path's variates, which is several
/// times cheaper per draw than running Philox for every draw. Normals use
/// Boost's ziggurat.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t stream)
      : engine_(derive_stream_key(seed, stream)) {}

  double normal() { return normal_(engine_); }

  /// Uniform on (0, 1).
  double uniform_open() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  boost::random::mt19937_64& engine() noexcept { return engine_; }

 private:
  boost::random::mt19937_64 engine_;
  boost::random::normal_distribution<double> normal_;
};

}  // namespace vdkernel
