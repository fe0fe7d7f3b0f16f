#include "dyer/development.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dyer {

namespace {

SyllableWord omega_word(const DyerGraph& g, vset_t omega) {
  SyllableWord w;
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(omega, v)) w.push_back({v, 1});
  return w;
}

}  // namespace

std::optional<int> DevelopmentBall::find_vertex(vset_t x, const SyllableWord& rep) const {
  const int xi = cx.scwol.vert_index(x);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].xi == xi && vertices[i].rep == rep) return static_cast<int>(i);
  return std::nullopt;
}

std::string DevelopmentBall::vertex_name(int v) const {
  return "(" + format_word(graph, vertices[v].rep) + "|" +
         subset_name(graph, cx.scwol.verts[vertices[v].xi]) + ")";
}

DevelopmentBall development_ball(const DyerGraph& g, int radius, const ReduceBudget& budget) {
  DevelopmentBall out;
  out.graph = g;
  out.radius = radius;
  out.cx = dyer_complex_of_groups(g);
  out.ball = enumerate_ball(g, radius, budget);

  const DyerScwol& s = out.cx.scwol;

  struct Less {
    bool operator()(const std::pair<int, SyllableWord>& a,
                    const std::pair<int, SyllableWord>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return word_less(a.second, b.second);
    }
  };
  std::map<std::pair<int, SyllableWord>, int, Less> index;

  for (const SyllableWord& e : out.ball.elements)
    for (std::size_t xi = 0; xi < s.verts.size(); ++xi) {
      SyllableWord rep = coset_canonical_rep(g, e, out.cx.local[xi], budget);
      index.try_emplace({static_cast<int>(xi), std::move(rep)}, 0);
    }
  for (auto& [key, idx] : index) {
    idx = static_cast<int>(out.vertices.size());
    out.vertices.push_back({key.second, key.first, true, true});
  }

  auto lookup = [&](int xi, const SyllableWord& rep) -> int {
    const auto it = index.find({xi, rep});
    return it == index.end() ? -1 : it->second;
  };

  // edges with both endpoints in the ball; interiority bookkeeping alongside
  for (std::size_t vi = 0; vi < out.vertices.size(); ++vi) {
    auto& vx = out.vertices[vi];
    const vset_t x = s.verts[vx.xi];
    for (std::size_t xe = 0; xe < s.edges.size(); ++xe) {
      const XEdge& e = s.edges[xe];
      if (e.x != x) continue;
      const int yi = s.vert_index(e.y);
      const SyllableWord tgt_rep = coset_canonical_rep(
          g, concat(vx.rep, inverse(omega_word(g, e.omega))), out.cx.local[yi], budget);
      const int tgt = lookup(yi, tgt_rep);
      if (tgt >= 0)
        out.edges.push_back({static_cast<int>(vi), tgt, static_cast<int>(xe)});
      else
        vx.interior_out = false;
    }
    // incoming: edges (Z, X, omega) and cosets h D^f_Z inside (rep) D^f_X phi(omega)
    for (std::size_t xe = 0; xe < s.edges.size(); ++xe) {
      const XEdge& e = s.edges[xe];
      if (e.y != x) continue;
      const int zi = s.vert_index(e.x);
      const auto& table = out.cx.local[vx.xi];
      for (std::size_t d = 0; d < table.order() && vx.interior_in; ++d) {
        const SyllableWord h = concat(concat(vx.rep, table.word(static_cast<int>(d))),
                                      omega_word(g, e.omega));
        const SyllableWord src_rep = coset_canonical_rep(g, h, out.cx.local[zi], budget);
        if (lookup(zi, src_rep) < 0) vx.interior_in = false;
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const auto& a, const auto& b) {
    if (a.src != b.src) return a.src < b.src;
    return a.xe < b.xe;
  });
  return out;
}

Scwol development_scwol(const DevelopmentBall& ball) {
  const DyerGraph& g = ball.graph;
  const DyerScwol& s = ball.cx.scwol;
  Scwol out;
  for (std::size_t v = 0; v < ball.vertices.size(); ++v)
    out.vertices.push_back(ball.vertex_name(static_cast<int>(v)));
  std::map<std::pair<int, int>, int> by_src_xe;
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    const auto& de = ball.edges[e];
    by_src_xe[{de.src, de.xe}] = static_cast<int>(e);
    out.edges.push_back({"(" + format_word(g, ball.vertices[de.src].rep) + "|" +
                             xedge_name(g, s.edges[de.xe]) + ")",
                         de.src, de.tgt, subset_name(g, s.edges[de.xe].omega)});
  }
  for (std::size_t a = 0; a < ball.edges.size(); ++a)
    for (std::size_t b = 0; b < ball.edges.size(); ++b) {
      const XEdge& ea = s.edges[ball.edges[a].xe];
      const XEdge& eb = s.edges[ball.edges[b].xe];
      if (ball.edges[b].tgt != ball.edges[a].src || eb.y != ea.x) continue;
      const XEdge comp{eb.x, ea.y, ea.omega | eb.omega};
      const auto it = by_src_xe.find({ball.edges[b].src, s.edge_index(comp)});
      if (it != by_src_xe.end())
        out.compose[{static_cast<int>(a), static_cast<int>(b)}] = it->second;
    }
  return out;
}

namespace {

std::vector<int> link_vertices(const DevelopmentBall& ball, int v, Direction dir) {
  if (dir == Direction::In && !ball.vertices[v].interior_in)
    throw domain_error("link: vertex is incoming-boundary");
  if (dir == Direction::Out && !ball.vertices[v].interior_out)
    throw domain_error("link: vertex is outgoing-boundary");
  std::set<int> span;
  for (const auto& e : ball.edges) {
    if (dir == Direction::In && e.tgt == v) span.insert(e.src);
    if (dir == Direction::Out && e.src == v) span.insert(e.tgt);
  }
  return {span.begin(), span.end()};
}

}  // namespace

Scwol star_scwol(const DevelopmentBall& ball, int v, Direction dir) {
  std::vector<int> span = link_vertices(ball, v, dir);
  span.push_back(v);
  std::sort(span.begin(), span.end());
  return sub_scwol(development_scwol(ball), span);
}

Scwol link_scwol(const DevelopmentBall& ball, int v, Direction dir) {
  return sub_scwol(development_scwol(ball), link_vertices(ball, v, dir));
}

std::string serialize_development(const DevelopmentBall& ball) {
  std::ostringstream os;
  os << "radius: " << ball.radius << '\n';
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    os << "vertex: " << ball.vertex_name(static_cast<int>(v)) << ' '
       << (ball.interior(static_cast<int>(v)) ? "interior" : "boundary");
    if (!ball.interior(static_cast<int>(v)))
      os << " (in:" << (ball.vertices[v].interior_in ? "full" : "cut")
         << " out:" << (ball.vertices[v].interior_out ? "full" : "cut") << ")";
    os << '\n';
  }
  for (const auto& e : ball.edges)
    os << "edge: " << ball.vertex_name(e.src) << " -> " << ball.vertex_name(e.tgt) << " via "
       << xedge_name(ball.graph, ball.cx.scwol.edges[e.xe]) << '\n';
  return os.str();
}

}  // namespace dyer
