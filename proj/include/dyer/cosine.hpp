#pragma once

#include "dyer/graph.hpp"
#include "dyer/types.hpp"

#include <cmath>
#include <vector>

namespace dyer {

/// cos(pi - pi/m) with the conventions m = 1 -> 1 and m = inf -> -1.
template <class Scalar = scalar_t>
Scalar cosine_entry(int m) {
  if (m == kInf) return Scalar(-1);
  return std::cos(Scalar(M_PI) - Scalar(M_PI) / Scalar(m));
}

/// Cosine matrix of an ordered vertex list; throws domain_error on unknown
/// or repeated vertices.
matrix_t cosine_matrix(const DyerGraph& g, const std::vector<int>& subset);
matrix_t cosine_matrix(const DyerGraph& g, vset_t subset);

/// Cholesky factorization attempt; positive definite iff every pivot clears
/// the threshold.
template <class Scalar = scalar_t>
bool positive_definite(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
                       Scalar pivot_tol = Scalar(kPdPivotTol)) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar d = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (d <= pivot_tol) return false;
    const Scalar root = std::sqrt(d);
    a(j, j) = root;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / root;
    }
  }
  return true;
}

/// Whether the induced Dyer group of the subset is spherical (Lemma: iff the
/// cosine matrix is positive definite).
bool is_spherical(const DyerGraph& g, vset_t subset, scalar_t pivot_tol = kPdPivotTol);

/// All cliques of the graph, the empty set included.
std::vector<vset_t> cliques(const DyerGraph& g);

/// All spherical subsets, sorted by (size, mask). Only cliques are tested:
/// a non-adjacent pair yields a singular 2x2 minor.
std::vector<vset_t> spherical_subsets(const DyerGraph& g,
                                      scalar_t pivot_tol = kPdPivotTol);

}  // namespace dyer
