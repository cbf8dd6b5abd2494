#include "isomoment/multi_index.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace isomoment {

MultiIndex::MultiIndex(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("MultiIndex: empty");
  for (int r : parts_) {
    if (r < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    degree_ += r;
  }
}

bool MultiIndex::all_even() const {
  for (int r : parts_)
    if (r % 2 != 0) return false;
  return true;
}

MultiIndex MultiIndex::doubled() const {
  std::vector<int> d = parts_;
  for (int& r : d) r *= 2;
  return MultiIndex(std::move(d));
}

CompositionRange::CompositionRange(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 1)
    throw std::invalid_argument("compositions: need m >= 0, n >= 1");
}

CompositionRange::iterator::iterator(int m, int n)
    : cur_(static_cast<std::size_t>(n), 0) {
  cur_[0] = m;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  // Decreasing-lex successor: take 1 from the rightmost nonzero entry
  // before the last position and dump it, plus everything to its right,
  // just after it.
  const int n = static_cast<int>(cur_.size());
  int j = -1;
  for (int i = n - 2; i >= 0; --i) {
    if (cur_[static_cast<std::size_t>(i)] > 0) {
      j = i;
      break;
    }
  }
  if (j < 0) {
    done_ = true;
    return *this;
  }
  int carried = 1;
  for (int i = j + 1; i < n; ++i) {
    carried += cur_[static_cast<std::size_t>(i)];
    cur_[static_cast<std::size_t>(i)] = 0;
  }
  cur_[static_cast<std::size_t>(j)] -= 1;
  cur_[static_cast<std::size_t>(j) + 1] = carried;
  return *this;
}

}  // namespace isomoment
