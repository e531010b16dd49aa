#pragma once

#include <cstdint>
#include <random>

namespace topoforge {

// Seeded generator used by every randomized component. mt19937_64 is fully
// specified by the standard; the draw helpers below avoid
// std::uniform_*_distribution, whose output differs between standard
// libraries, so identical seeds reproduce runs bit-exact on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), modulo bias removed by rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x;
    do {
      x = eng_();
    } while (x < rem);
    return x % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  bool coin() { return (eng_() & 1) != 0; }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace topoforge
