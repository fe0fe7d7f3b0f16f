#pragma once

#include "dyer/cosine.hpp"
#include "dyer/finite_group.hpp"
#include "dyer/presentation.hpp"
#include "dyer/scwol.hpp"
#include "dyer/word.hpp"

#include <string>
#include <vector>

namespace dyer {

/// An edge (X, Y, omega) of the scwol of a Dyer graph: X strictly inside Y,
/// both spherical, omega a subset of the infinite-order part of Y \ X.
struct XEdge {
  vset_t x = 0, y = 0, omega = 0;
  friend auto operator<=>(const XEdge&, const XEdge&) = default;
};

std::string xedge_name(const DyerGraph& g, const XEdge& e);

/// The scwol X(Gamma): spherical subsets with edges (X, Y, omega) composed by
/// (Y,Z,w')(X,Y,w) = (X,Z,w u w').
struct DyerScwol {
  std::vector<vset_t> verts;  // sorted by (size, mask)
  std::vector<XEdge> edges;   // sorted

  int vert_index(vset_t x) const;
  int edge_index(const XEdge& e) const;
  Scwol to_scwol(const DyerGraph& g) const;
};

DyerScwol dyer_scwol(const DyerGraph& g);

/// The complex of groups D(X): local group D^f_X at each vertex, natural
/// inclusions along edges, together with the morphism to D given by the
/// inclusions and phi(X,Y,omega) = prod_{v in omega} x_v.
struct ComplexOfGroups {
  DyerGraph graph;
  DyerScwol scwol;
  std::vector<FiniteGroupTable> local;  // parallel to scwol.verts

  const FiniteGroupTable& table_at(vset_t x) const { return local[scwol.vert_index(x)]; }
  /// phi(alpha) as a word of D.
  SyllableWord phi(const XEdge& e) const;
};

ComplexOfGroups dyer_complex_of_groups(const DyerGraph& g, std::size_t max_order = 10'000);

/// Morphism conditions checked mechanically: Ad(phi(alpha)) phi_i = phi_t psi
/// on generators and phi(alpha beta) = phi(alpha) phi(beta). Returns human
/// readable failures (empty on success).
std::vector<std::string> verify_morphism(const ComplexOfGroups& cx, const ReduceBudget& budget = {});

/// BFS maximal tree in the underlying graph, rooted at the least vertex;
/// returns edge indices into scwol.edges. Throws when disconnected.
std::vector<int> maximal_tree(const DyerScwol& s);

/// The fundamental group presentation of the complex of groups over a chosen
/// maximal tree: local generators named v@X plus edge generators e+ / e-,
/// with the five standard relation families.
Presentation fundamental_group_presentation(const ComplexOfGroups& cx,
                                            const std::vector<int>& tree);

}  // namespace dyer
