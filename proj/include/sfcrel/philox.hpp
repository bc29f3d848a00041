#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Output is a pure function of (key, counter), so any draw can be recomputed
// from its coordinates without stream state.

#include <array>
#include <cstdint>

namespace sfcrel {

class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit constexpr Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr Counter operator()(Counter ctr) const {
    Key key = key_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      ctr = single_round(ctr, key);
    }
    return ctr;
  }

  /// Two uniforms in [0, 1) with 53 random bits each, addressed by (stream, block).
  constexpr std::array<double, 2> uniforms(std::uint64_t stream, std::uint64_t block) const {
    const Counter out = (*this)({static_cast<std::uint32_t>(stream),
                                 static_cast<std::uint32_t>(stream >> 32),
                                 static_cast<std::uint32_t>(block),
                                 static_cast<std::uint32_t>(block >> 32)});
    return {to_unit(out[0], out[1]), to_unit(out[2], out[3])};
  }

 private:
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;

  static constexpr Counter single_round(const Counter& c, const Key& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    return {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
  }

  static constexpr double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32 | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

  Key key_;
};

}  // namespace sfcrel
