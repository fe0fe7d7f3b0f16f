#include "dyer/cosine.hpp"

#include <algorithm>
#include <set>

namespace dyer {

matrix_t cosine_matrix(const DyerGraph& g, const std::vector<int>& subset) {
  std::set<int> seen;
  for (int v : subset) {
    if (v < 0 || v >= g.size()) throw domain_error("cosine_matrix: vertex out of range");
    if (!seen.insert(v).second) throw domain_error("cosine_matrix: repeated vertex");
  }
  const int n = static_cast<int>(subset.size());
  matrix_t c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = cosine_entry(g.m(subset[i], subset[j]));
  return c;
}

matrix_t cosine_matrix(const DyerGraph& g, vset_t subset) {
  std::vector<int> vs;
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(subset, v)) vs.push_back(v);
  return cosine_matrix(g, vs);
}

bool is_spherical(const DyerGraph& g, vset_t subset, scalar_t pivot_tol) {
  if ((subset & ~g.all_vertices()) != 0) throw domain_error("is_spherical: vertex out of range");
  return positive_definite(cosine_matrix(g, subset), pivot_tol);
}

std::vector<vset_t> cliques(const DyerGraph& g) {
  std::vector<vset_t> out{0};
  // Grow cliques by their largest vertex; out stays sorted by (size, mask).
  std::vector<vset_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<vset_t> next;
    for (vset_t c : frontier) {
      const int lo = c == 0 ? 0 : 64 - __builtin_clzll(c);
      for (int v = lo; v < g.size(); ++v) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          if (vset_contains(c, u) && !g.adjacent(u, v)) ok = false;
        if (ok) next.push_back(vset_with(c, v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<vset_t> spherical_subsets(const DyerGraph& g, scalar_t pivot_tol) {
  std::vector<vset_t> out;
  for (vset_t c : cliques(g))
    if (is_spherical(g, c, pivot_tol)) out.push_back(c);
  std::sort(out.begin(), out.end(), [](vset_t a, vset_t b) {
    if (vset_size(a) != vset_size(b)) return vset_size(a) < vset_size(b);
    return a < b;
  });
  return out;
}

}  // namespace dyer
