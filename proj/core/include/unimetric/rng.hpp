#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Deterministic random streams. Every sampler in this library is seeded
// explicitly and uses the fixed algorithms below, so a (seed, request)
// pair yields identical bytes on every platform and in every build.

namespace unimetric {

// SplitMix64 finalizer (Vigna). Bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// SplitMix64 sequence; used only to expand seeds into generator state.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// Seed for child stream `stream` of `parent`. Stateless, so grid cells can
// derive their streams independently and in any order.
constexpr std::uint64_t derive_seed(std::uint64_t parent,
                                    std::uint64_t stream) noexcept {
  return mix64(parent ^ mix64(stream ^ 0x9E3779B97F4A7C15ull));
}

// xoshiro256++ (Blackman & Vigna), state expanded from the seed by SplitMix64.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Top 53 bits of the next word; value in [0,1).
  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Value in (0,1]; safe as a log() argument.
  double uniform01_positive() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Value in (0,1), both endpoints excluded (bin midpoints of [0,1)).
  double uniform01_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

// Standard normal stream via Box-Muller: each refill consumes exactly two
// uniforms and yields exactly two normals; a carry serves odd-length
// requests. Draw order is the call order, nothing is buffered beyond the
// single carried value.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) noexcept : gen_(seed) {}

  double next() noexcept {
    if (have_carry_) {
      have_carry_ = false;
      return carry_;
    }
    const double u1 = gen_.uniform01_positive();
    const double u2 = gen_.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    carry_ = r * std::sin(a);
    have_carry_ = true;
    return r * std::cos(a);
  }

  // Raw uniforms from the same underlying stream (used for discrete choices
  // and box coordinates interleaved with normal draws). Do not touch the
  // carry.
  double uniform01() noexcept { return gen_.uniform01(); }
  double uniform01_open() noexcept { return gen_.uniform01_open(); }

 private:
  Xoshiro256pp gen_;
  double carry_ = 0.0;
  bool have_carry_ = false;
};

}  // namespace unimetric
