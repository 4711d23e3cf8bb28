#pragma once

#include <array>
#include <cstdint>

namespace hyperstrength {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). The output is
// a pure function of (counter, key), so any draw can be recomputed without
// replaying a stream.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * counter[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * counter[2];
      counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
                 static_cast<std::uint32_t>(p1),
                 static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
                 static_cast<std::uint32_t>(p0)};
    }
    return counter;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

/// Uniform doubles in [0, 1) for one (seed, stream) pair. Draw j comes from
/// counter (stream_lo, stream_hi, j/2 lo, j/2 hi), two 53-bit values per block.
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  double next() {
    if (!have_second_) {
      block_ = Philox4x32::generate({static_cast<std::uint32_t>(stream_),
                                     static_cast<std::uint32_t>(stream_ >> 32),
                                     static_cast<std::uint32_t>(block_index_),
                                     static_cast<std::uint32_t>(block_index_ >> 32)},
                                    key_);
      ++block_index_;
      have_second_ = true;
      return to_unit(block_[0], block_[1]);
    }
    have_second_ = false;
    return to_unit(block_[2], block_[3]);
  }

  static double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = ((std::uint64_t{hi} << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Philox4x32::Counter block_{};
  bool have_second_ = false;
};

}  // namespace hyperstrength
