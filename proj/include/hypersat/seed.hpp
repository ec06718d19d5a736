#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hypersat {

// SplitMix64 finaliser applied to master + (index + 1) * 0x9E3779B97F4A7C15.
// Child streams depend only on (master, index), never on scheduling.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept;

class Seed {
 public:
  constexpr explicit Seed(std::uint64_t master = 0) noexcept : master_(master) {}

  constexpr std::uint64_t master() const noexcept { return master_; }
  Seed child(std::uint64_t index) const noexcept { return Seed(mix_seed(master_, index)); }

  friend constexpr bool operator==(Seed a, Seed b) noexcept { return a.master_ == b.master_; }

 private:
  std::uint64_t master_;
};

// Engine plus portable draws. The standard distributions are
// implementation-defined, so byte-identical output needs our own.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.master()) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::span<T> xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    shuffle(std::span<T>(xs));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hypersat
