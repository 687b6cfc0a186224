#pragma once

#include <cstdint>
#include <vector>

#include "ghwlab/fq_linalg.hpp"

namespace ghwlab {

// Number of r-dimensional subspaces of F_q^d; saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(int d, int r, std::uint64_t q);

// All r-subsets of {0..d-1} in colexicographic order.
std::vector<std::vector<int>> pivot_patterns(int d, int r);

// Enumerates r-dimensional subspaces of F_q^d, each exactly once, as reduced
// row echelon bases. Pivot patterns advance in colex order; within a pattern the
// free entries (row-major) form an odometer whose last digit turns fastest.
// Entries are F_q indices, so 0 and 1 are the field's zero and one.
class SubspaceIter {
 public:
  SubspaceIter(int d, int r, std::uint32_t q);
  // Only the subspaces whose RREF pivot columns are exactly `pivots`.
  SubspaceIter(int d, std::vector<int> pivots, std::uint32_t q);

  bool done() const { return done_; }
  void next();

  const fqla::Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Subspaces produced before the current one.
  std::uint64_t position() const { return position_; }

 private:
  void load_pattern();
  bool next_pattern();

  int d_;
  int r_;
  std::uint32_t q_;
  bool single_pattern_;
  bool done_ = false;
  std::uint64_t position_ = 0;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, col)
  fqla::Matrix basis_;
};

}  // namespace ghwlab
