#pragma once

// Counter-based SplitMix64.
//
// The k-th output (k = 0, 1, ...) of the stream with key s is
//   mix64(s + (k + 1) * 0x9E3779B97F4A7C15)
// where mix64 is the SplitMix64 finalizer. This is exactly the sequence produced
// by the reference splitmix64.c seeded with s, so any implementation of those
// few lines reproduces every sample. Doubles take the top 53 bits.

#include <cstdint>
#include <limits>

namespace kakeya {

class CounterRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0) : key_(key), counter_(counter) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  static constexpr std::uint64_t mix64(std::uint64_t z)
  {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Output at an arbitrary position; does not advance the stream.
  result_type at(std::uint64_t k) const { return mix64(key_ + (k + 1) * golden_gamma); }

  result_type operator()() { return at(counter_++); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform index in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n)
  {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x;
    do x = (*this)();
    while (x >= limit);
    return x % n;
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Independent stream key for (master seed, stream id).
constexpr std::uint64_t derive_stream_key(std::uint64_t master, std::uint64_t stream)
{
  return CounterRng::mix64(master ^ CounterRng::mix64(stream + CounterRng::golden_gamma));
}

}  // namespace kakeya
