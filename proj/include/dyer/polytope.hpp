#pragma once

#include "dyer/cosine.hpp"
#include "dyer/finite_group.hpp"
#include "dyer/graph.hpp"

#include <string>
#include <vector>

namespace dyer {

/// Gram matrix of the simple roots, <a_s, a_t> = -cos(pi / m(s,t)).
template <class Scalar = scalar_t>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> bilinear_form(const DyerGraph& cox) {
  const int n = cox.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> b(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      b(s, t) = cox.m(s, t) == kInf ? Scalar(-1)
                                    : -std::cos(Scalar(M_PI) / Scalar(cox.m(s, t)));
  return b;
}

/// Canonical reflection representation of a finite Coxeter group: the form B
/// and the generator matrices rho(s) acting on simple-root coefficients.
struct ReflectionRep {
  DyerGraph cox;
  matrix_t bilinear;
  std::vector<matrix_t> rho;

  /// rho applied letterwise to a word.
  matrix_t matrix_of(const SyllableWord& w) const;
  scalar_t inner(const vector_t& x, const vector_t& y) const { return x.dot(bilinear * y); }
  scalar_t norm(const vector_t& x) const { return std::sqrt(inner(x, x)); }
};

/// Requires every vertex order 2 and a positive definite form (finite group).
ReflectionRep canonical_representation(const DyerGraph& cox);

/// The orbit polytope of x0 = sum of dual roots: one point per group element,
/// faces indexed by parabolic cosets w W_T.
struct CoxeterPolytope {
  ReflectionRep rep;
  FiniteGroupTable table;
  vector_t base_point;               // coefficients of x0
  std::vector<vector_t> points;      // rho(w) x0 per element
  struct Face {
    vset_t t = 0;
    int coset_rep = 0;               // least element index of the coset
    std::vector<int> elems;          // sorted element indices
  };
  std::vector<Face> faces;           // sorted by (|T|, T, coset_rep)

  const Face& face_of(vset_t t, int elem) const;
};

CoxeterPolytope polytope(const DyerGraph& cox, std::size_t max_order = 10'000);

/// Checks Davis Lemma 7.3.3 data: orbit points pairwise distinct and coset
/// inclusion equivalent to geometric vertex-set inclusion. On failure the
/// witness names the offending pair.
bool face_poset_check(const CoxeterPolytope& p, std::string* witness = nullptr);

/// Translation carrying the standalone polytope of W_T onto the face
/// Cox_T(W); max_error is the largest pointwise mismatch in coefficients.
struct TranslationData {
  vector_t offset;
  scalar_t max_error = 0;
};
TranslationData subpolytope_isometry(const CoxeterPolytope& p, vset_t t);

/// Wavefront OBJ of a 2- or 3-dimensional polytope (2-faces as polygons).
std::string polytope_obj(const CoxeterPolytope& p);

/// Structured-text face poset keyed by coset representative words.
std::string face_poset_dump(const CoxeterPolytope& p);

}  // namespace dyer
