#include "dyer/complex_of_groups.hpp"

#include "dyer/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace dyer {

std::string xedge_name(const DyerGraph& g, const XEdge& e) {
  return "(" + subset_name(g, e.x) + "<" + subset_name(g, e.y) + "|" + subset_name(g, e.omega) +
         ")";
}

int DyerScwol::vert_index(vset_t x) const {
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == x) return static_cast<int>(i);
  throw domain_error("DyerScwol: subset is not a vertex");
}

int DyerScwol::edge_index(const XEdge& e) const {
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) throw domain_error("DyerScwol: unknown edge");
  return static_cast<int>(it - edges.begin());
}

Scwol DyerScwol::to_scwol(const DyerGraph& g) const {
  Scwol s;
  for (vset_t v : verts) s.vertices.push_back(subset_name(g, v));
  for (const XEdge& e : edges)
    s.edges.push_back({xedge_name(g, e), vert_index(e.x), vert_index(e.y),
                       subset_name(g, e.omega)});
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (edges[b].y == edges[a].x)
        s.compose[{static_cast<int>(a), static_cast<int>(b)}] =
            edge_index({edges[b].x, edges[a].y, edges[a].omega | edges[b].omega});
  return s;
}

DyerScwol dyer_scwol(const DyerGraph& g) {
  DyerScwol s;
  s.verts = spherical_subsets(g);
  for (vset_t x : s.verts)
    for (vset_t y : s.verts) {
      if (x == y || (x & ~y)) continue;
      const vset_t free = (y & ~x) & g.vinf();
      // all omega subsets of free
      vset_t omega = 0;
      while (true) {
        s.edges.push_back({x, y, omega});
        if (omega == free) break;
        omega = (omega - free) & free;  // next subset in mask order
      }
    }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

SyllableWord ComplexOfGroups::phi(const XEdge& e) const {
  SyllableWord w;
  for (int v = 0; v < graph.size(); ++v)
    if (vset_contains(e.omega, v)) w.push_back({v, 1});
  return w;
}

ComplexOfGroups dyer_complex_of_groups(const DyerGraph& g, std::size_t max_order) {
  ComplexOfGroups cx{g, dyer_scwol(g), {}};
  for (vset_t x : cx.scwol.verts)
    cx.local.push_back(FiniteGroupTable::enumerate(g, x & ~g.vinf(), max_order));
  return cx;
}

std::vector<std::string> verify_morphism(const ComplexOfGroups& cx, const ReduceBudget& budget) {
  std::vector<std::string> issues;
  const DyerGraph& g = cx.graph;
  for (const XEdge& e : cx.scwol.edges) {
    // Ad(phi(alpha)) phi_i = phi_t psi on local generators: phi(omega)
    // commutes with every generator of D^f_X.
    const SyllableWord w = cx.phi(e);
    for (int v = 0; v < g.size(); ++v) {
      if (!vset_contains(e.x & ~g.vinf(), v)) continue;
      const SyllableWord lhs = concat(concat(w, {{v, 1}}), concat(inverse(w), {{v, -1}}));
      if (!is_trivial(g, lhs, budget))
        issues.push_back("Ad(phi) condition fails on " + xedge_name(g, e) + " at generator " +
                         g.id(v));
    }
  }
  for (const XEdge& a : cx.scwol.edges)
    for (const XEdge& b : cx.scwol.edges) {
      if (b.y != a.x) continue;
      const XEdge ab{b.x, a.y, a.omega | b.omega};
      const SyllableWord lhs = concat(cx.phi(a), cx.phi(b));
      if (!same_element(g, lhs, cx.phi(ab), budget))
        issues.push_back("phi(alpha beta) != phi(alpha) phi(beta) on " + xedge_name(g, a) + ", " +
                         xedge_name(g, b));
    }
  return issues;
}

std::vector<int> maximal_tree(const DyerScwol& s) {
  const int n = static_cast<int>(s.verts.size());
  std::vector<int> seen(n, 0);
  std::vector<int> tree;
  if (n == 0) return tree;
  // adjacency in the underlying undirected graph, deterministic edge order
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      const int a = s.vert_index(s.edges[e].x), b = s.vert_index(s.edges[e].y);
      int other = -1;
      if (a == v && !seen[b]) other = b;
      if (b == v && !seen[a]) other = a;
      if (other < 0) continue;
      seen[other] = 1;
      ++reached;
      tree.push_back(static_cast<int>(e));
      queue.push_back(other);
    }
  }
  if (reached != n) throw domain_error("maximal_tree: scwol is not connected");
  return tree;
}

Presentation fundamental_group_presentation(const ComplexOfGroups& cx,
                                            const std::vector<int>& tree) {
  const DyerGraph& g = cx.graph;
  const DyerScwol& s = cx.scwol;
  std::vector<char> in_tree(s.edges.size(), 0);
  for (int e : tree) {
    if (e < 0 || e >= static_cast<int>(s.edges.size()))
      throw domain_error("fundamental_group_presentation: bad tree edge");
    in_tree[e] = 1;
  }
  {
    // tree must be a spanning tree of the underlying graph
    std::vector<int> root(s.verts.size());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (int e : tree) {
      const int a = find(s.vert_index(s.edges[e].x)), b = find(s.vert_index(s.edges[e].y));
      if (a == b) throw domain_error("fundamental_group_presentation: tree has a cycle");
      root[a] = b;
    }
    if (tree.size() + 1 != s.verts.size())
      throw domain_error("fundamental_group_presentation: tree is not maximal");
  }

  Presentation p;
  // local generators v@X for X ranging over vertices, v over X2 u Xp
  std::map<std::pair<int, int>, int> local_gen;  // (vert idx, graph vertex) -> generator
  for (std::size_t xi = 0; xi < s.verts.size(); ++xi)
    for (int v = 0; v < g.size(); ++v)
      if (vset_contains(s.verts[xi] & ~g.vinf(), v)) {
        local_gen[{static_cast<int>(xi), v}] = static_cast<int>(p.generators.size());
        p.generators.push_back(g.id(v) + "@" + subset_name(g, s.verts[xi]));
      }
  std::vector<int> eplus(s.edges.size()), eminus(s.edges.size());
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    eplus[e] = static_cast<int>(p.generators.size());
    p.generators.push_back("+" + xedge_name(g, s.edges[e]));
    eminus[e] = static_cast<int>(p.generators.size());
    p.generators.push_back("-" + xedge_name(g, s.edges[e]));
  }

  // (1) local relations, re-indexed into the ambient generator list
  for (std::size_t xi = 0; xi < s.verts.size(); ++xi) {
    const Presentation lp = dyer_presentation(g.induced(s.verts[xi] & ~g.vinf()));
    const DyerGraph lg = g.induced(s.verts[xi] & ~g.vinf());
    for (const SyllableWord& r : lp.relators) {
      SyllableWord out;
      for (const Syllable& sy : r)
        out.push_back(
            {local_gen.at({static_cast<int>(xi), g.index_of(lg.id(sy.gen))}), sy.exp});
      p.relators.push_back(std::move(out));
    }
  }
  // (2) alpha+ alpha- = 1
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    p.relators.push_back({{eplus[e], 1}, {eminus[e], 1}});
  // (3) alpha+ beta+ = (alpha beta)+
  for (std::size_t a = 0; a < s.edges.size(); ++a)
    for (std::size_t b = 0; b < s.edges.size(); ++b) {
      if (s.edges[b].y != s.edges[a].x) continue;
      const XEdge ab{s.edges[b].x, s.edges[a].y, s.edges[a].omega | s.edges[b].omega};
      p.relators.push_back(
          {{eplus[a], 1}, {eplus[b], 1}, {eminus[s.edge_index(ab)], 1}});
    }
  // (4) psi_alpha(s) = alpha+ s alpha-
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const int xi = s.vert_index(s.edges[e].x);
    const int yi = s.vert_index(s.edges[e].y);
    for (int v = 0; v < g.size(); ++v)
      if (vset_contains(s.edges[e].x & ~g.vinf(), v))
        p.relators.push_back({{eplus[e], 1},
                              {local_gen.at({xi, v}), 1},
                              {eminus[e], 1},
                              {local_gen.at({yi, v}), -1}});
  }
  // (5) tree edges are trivial
  for (int e : tree) p.relators.push_back({{eplus[e], 1}});
  return p;
}

}  // namespace dyer
