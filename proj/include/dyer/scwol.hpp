#pragma once

#include "dyer/types.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dyer {

/// A small category without loops, stored explicitly: vertices, directed
/// edges with initial/terminal maps, and the composition table on composable
/// pairs. `label` is presentation-only (the omega annotation in scwols of
/// Dyer type); it shows up in DOT output.
struct Scwol {
  struct Edge {
    std::string id;
    int iv = 0, tv = 0;
    std::string label;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> compose;  // (a, b) with i(a) = t(b) -> a o b

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
};

/// Axiom violations (empty when the structure is a scwol): no loops, both
/// composition laws, totality of compose on composable pairs, associativity.
std::vector<std::string> check_scwol(const Scwol& s);

/// Scwol of a finite strict partial order: one edge (b, a) per comparable
/// pair b < a; throws domain_error when the relation is not a strict order.
Scwol scwol_from_poset(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& less);

/// n-ary product; vertex ids join factor ids with '|', edge components render
/// as the factor edge id or '.' for a stationary vertex.
Scwol scwol_product(const std::vector<Scwol>& factors);

/// Id-based equality: same vertex ids, same edge ids with matching endpoints,
/// same composition table. Insensitive to storage order.
bool same_scwol(const Scwol& a, const Scwol& b);

/// Full subscwol spanned by a vertex subset.
Scwol sub_scwol(const Scwol& s, const std::vector<int>& vertex_subset);

std::string scwol_dot(const Scwol& s, const std::string& name = "scwol");

}  // namespace dyer
