#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dyer {

using scalar_t = double;
using matrix_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, Eigen::Dynamic>;
using vector_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, 1>;
using imatrix_t = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Sentinel for an infinite vertex order f(v) = inf or an absent edge m(u,v) = inf.
inline constexpr int kInf = std::numeric_limits<int>::max();

/// Pivot threshold for the positive-definiteness decision.
inline constexpr scalar_t kPdPivotTol = 1e-9;
/// Tolerance for matrix identities of the reflection representation.
inline constexpr scalar_t kRepTol = 1e-9;
/// Tolerance for point identity in polytope coordinates.
inline constexpr scalar_t kPointTol = 1e-6;

/// Vertex subsets as bitmasks; graphs are capped at 64 vertices.
using vset_t = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline bool vset_contains(vset_t s, int v) { return (s >> v) & 1u; }
inline vset_t vset_with(vset_t s, int v) { return s | (vset_t{1} << v); }
inline vset_t vset_without(vset_t s, int v) { return s & ~(vset_t{1} << v); }
inline int vset_size(vset_t s) { return __builtin_popcountll(s); }

struct search_budget_error : std::runtime_error {
  explicit search_budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct order_budget_error : std::runtime_error {
  explicit order_budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dyer
