#pragma once

#include <vector>

#include "gwsym/gw.hpp"

namespace gwsym {

// Symmetric matrix of a bilinear form, exact rational entries.
struct GramMatrix {
  FieldDesc field = FieldDesc::Q();
  std::vector<std::vector<Rat>> entries;

  std::size_t dim() const { return entries.size(); }
  void check_symmetric() const;  // Domain error when not square/symmetric
};

// Congruence diagonalization (symmetric Gaussian elimination). Pivots take the first
// nonzero diagonal entry in index order; an all-zero diagonal with a nonzero off-diagonal
// entry at (i, j) is repaired by adding row and column j into i. Returns the dim() nonzero
// diagonal values; SingularGram when the rank is deficient.
std::vector<Rat> diagonalize(const GramMatrix& G);

// Orthogonal sum of the square classes of the diagonal values.
GWElement gram_to_gw(const GramMatrix& G);

}  // namespace gwsym
