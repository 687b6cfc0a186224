#include "ghwlab/subspace_iter.hpp"

#include <limits>
#include <stdexcept>

namespace ghwlab {

namespace {

// Colex successor of an increasing r-subset of {0..d-1}; false after the last one.
bool colex_next(std::vector<int>& c, int d) {
  const int r = static_cast<int>(c.size());
  for (int i = 0; i < r; ++i) {
    int limit = i + 1 < r ? c[i + 1] : d;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int k = 0; k < i; ++k) c[k] = k;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t gaussian_binomial(int d, int r, std::uint64_t q) {
  if (r < 0 || r > d) return 0;
  if (r > d - r) r = d - r;
  // prod_{i<r} (q^{d-i} - 1) / (q^{i+1} - 1), kept exact by multiplying before dividing.
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  auto qpow = [&](int e) -> unsigned __int128 {
    unsigned __int128 x = 1;
    for (int i = 0; i < e; ++i) {
      x *= q;
      if (x > cap) return 0;
    }
    return x;
  };
  for (int i = 0; i < r; ++i) {
    unsigned __int128 num = qpow(d - i);
    unsigned __int128 den = qpow(i + 1);
    if (num == 0 || den == 0) return std::numeric_limits<std::uint64_t>::max();
    num -= 1;
    den -= 1;
    if (acc > cap / num) return std::numeric_limits<std::uint64_t>::max();
    acc = acc * num / den;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::vector<int>> pivot_patterns(int d, int r) {
  if (r < 0 || r > d) throw std::invalid_argument("pivot_patterns: need 0 <= r <= d");
  std::vector<std::vector<int>> out;
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  do {
    out.push_back(c);
  } while (colex_next(c, d));
  return out;
}

SubspaceIter::SubspaceIter(int d, int r, std::uint32_t q) : d_(d), r_(r), q_(q), single_pattern_(false) {
  if (r < 0 || r > d) throw std::invalid_argument("SubspaceIter: need 0 <= r <= d");
  if (q < 2) throw std::invalid_argument("SubspaceIter: q must be at least 2");
  pivots_.resize(r);
  for (int i = 0; i < r; ++i) pivots_[i] = i;
  load_pattern();
}

SubspaceIter::SubspaceIter(int d, std::vector<int> pivots, std::uint32_t q)
    : d_(d), r_(static_cast<int>(pivots.size())), q_(q), single_pattern_(true), pivots_(std::move(pivots)) {
  if (q < 2) throw std::invalid_argument("SubspaceIter: q must be at least 2");
  for (int i = 0; i < r_; ++i)
    if (pivots_[i] < 0 || pivots_[i] >= d || (i > 0 && pivots_[i] <= pivots_[i - 1]))
      throw std::invalid_argument("SubspaceIter: pivots must be increasing columns below d");
  load_pattern();
}

void SubspaceIter::load_pattern() {
  basis_.assign(r_, fqla::Vec(d_, 0));
  free_.clear();
  std::vector<bool> is_pivot(d_, false);
  for (int c : pivots_) is_pivot[c] = true;
  for (int i = 0; i < r_; ++i) {
    basis_[i][pivots_[i]] = 1;
    for (int c = pivots_[i] + 1; c < d_; ++c)
      if (!is_pivot[c]) free_.emplace_back(i, c);
  }
}

bool SubspaceIter::next_pattern() {
  if (single_pattern_ || !colex_next(pivots_, d_)) return false;
  load_pattern();
  return true;
}

void SubspaceIter::next() {
  if (done_) return;
  ++position_;
  for (auto it = free_.rbegin(); it != free_.rend(); ++it) {
    FqIndex& v = basis_[it->first][it->second];
    if (++v < q_) return;
    v = 0;
  }
  if (!next_pattern()) done_ = true;
}

}  // namespace ghwlab
