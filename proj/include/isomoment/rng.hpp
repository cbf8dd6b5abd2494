#ifndef ISOMOMENT_RNG_HPP
#define ISOMOMENT_RNG_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace isomoment {

/// Default seed for every stochastic entry point.
inline constexpr std::uint64_t kDefaultSeed = 0xD1CE;

namespace detail {

/// SplitMix64 finalizer; a high-quality 64-bit mixing step.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Counter-based stream generator.  Every draw is a pure function of
// (seed, stream, draw index), so sample i always sees the same numbers no
// matter how samples are partitioned across threads or processes.  Streams
// are cheap to construct; Monte Carlo drivers open stream i for sample i.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(detail::mix64(detail::mix64(seed + 0x632BE59BD9B4E019ULL) ^
                           detail::mix64(stream))) {}

  std::uint64_t next_u64() {
    return detail::mix64(key_ ^ detail::mix64(counter_++));
  }

  /// Uniform on (0, 1].
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; draws come in pairs, one is cached.
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Pairwise (binary-counter) summation: deterministic for a fixed push order
// and far less rounding drift than a running sum over 10^6 samples.
class PairwiseSum {
 public:
  void push(double x) {
    std::uint64_t c = count_++;
    for (; c & 1; c >>= 1) {
      x += levels_.back();
      levels_.pop_back();
    }
    levels_.push_back(x);
  }

  double total() const {
    double s = 0.0;
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) s += *it;
    return s;
  }

  std::uint64_t count() const { return count_; }

 private:
  std::vector<double> levels_;  // levels_[i] holds a sum of a power-of-two block
  std::uint64_t count_ = 0;
};

/// A Monte Carlo mean with its uncertainty and provenance.
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Pairwise-accumulated mean and standard error of f(stream i) for
/// i = 0..n_samples-1.  f takes a CounterRng& and returns one double.
template <class SampleFn>
MCEstimate mc_mean(std::int64_t n_samples, std::uint64_t seed, SampleFn&& f) {
  if (n_samples < 2)
    throw std::invalid_argument("mc_mean: need at least 2 samples");
  PairwiseSum sum;
  PairwiseSum sum_sq;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    const double x = f(rng);
    sum.push(x);
    sum_sq.push(x * x);
  }
  MCEstimate est;
  est.n_samples = n_samples;
  est.seed = seed;
  const double n = static_cast<double>(n_samples);
  est.mean = sum.total() / n;
  const double var = (sum_sq.total() - n * est.mean * est.mean) / (n - 1.0);
  est.std_error = std::sqrt(std::max(var, 0.0) / n);
  return est;
}

}  // namespace isomoment

#endif
