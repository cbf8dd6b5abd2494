#ifndef ISOMOMENT_MULTI_INDEX_HPP
#define ISOMOMENT_MULTI_INDEX_HPP

#include "isomoment/rational.hpp"

#include <cstddef>
#include <vector>

namespace isomoment {

/// Exponent vector (r_1, ..., r_n) of a monomial moment.  Non-empty,
/// entries >= 0.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> parts);
  MultiIndex(std::initializer_list<int> parts)
      : MultiIndex(std::vector<int>(parts)) {}

  int size() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  bool all_even() const;

  /// Component-wise doubling: (r_1, ..., r_n) -> (2 r_1, ..., 2 r_n).
  MultiIndex doubled() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

// Lazy enumeration of the n-part compositions of m in decreasing
// lexicographic order, (m,0,...,0) first, (0,...,0,m) last.  There are
// C(m+n-1, n-1) of them, so the range is never materialized.
class CompositionRange {
 public:
  CompositionRange(int m, int n);

  struct sentinel {};

  class iterator {
   public:
    using value_type = MultiIndex;

    explicit iterator(int m, int n);
    MultiIndex operator*() const { return MultiIndex(cur_); }
    const std::vector<int>& parts() const { return cur_; }
    iterator& operator++();
    friend bool operator==(const iterator& it, sentinel) { return it.done_; }

   private:
    std::vector<int> cur_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(m_, n_); }
  sentinel end() const { return {}; }

  BigInt count() const { return binomial(m_ + n_ - 1, n_ - 1); }

 private:
  int m_;
  int n_;
};

/// All n-part compositions of m, lazily.
inline CompositionRange compositions(int m, int n) {
  return CompositionRange(m, n);
}

}  // namespace isomoment

#endif
