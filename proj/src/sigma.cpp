#include "dyer/sigma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
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

ElementaryBlock elementary_block(const DyerGraph& g, vset_t y, std::size_t max_order) {
  if (!is_spherical(g, y)) throw domain_error("elementary_block: subset is not spherical");
  ElementaryBlock block;
  block.y = y;
  block.cox = FiniteGroupTable::enumerate(g, y & g.v2(), max_order);
  for (int v = 0; v < g.size(); ++v) {
    if (vset_contains(y & g.vinf(), v)) block.yinf.push_back(v);
    if (vset_contains(y & g.vp(), v)) block.yp.push_back(v);
  }

  // vertices: D_{Y2} x P(Yinf) x prod_v ({center} u C_f(v))
  vset_t inf_mask = 0;
  for (int v : block.yinf) inf_mask = vset_with(inf_mask, v);
  std::vector<std::vector<int>> stars{{}};
  for (int v : block.yp) {
    std::vector<std::vector<int>> next;
    for (const auto& st : stars)
      for (int e = -1; e < g.f(v); ++e) {
        auto s2 = st;
        s2.push_back(e);
        next.push_back(std::move(s2));
      }
    stars = std::move(next);
  }
  for (std::size_t i = 0; i < block.cox.order(); ++i)
    for (vset_t lam = 0;; lam = (lam - inf_mask) & inf_mask) {
      for (const auto& st : stars) block.vertices.push_back({static_cast<int>(i), lam, st});
      if (lam == inf_mask) break;
    }

  // index map for edge construction
  std::map<std::tuple<int, vset_t, std::vector<int>>, int> index;
  for (std::size_t k = 0; k < block.vertices.size(); ++k)
    index[{block.vertices[k].w, block.vertices[k].lambda, block.vertices[k].star}] =
        static_cast<int>(k);

  for (std::size_t k = 0; k < block.vertices.size(); ++k) {
    const auto& vx = block.vertices[k];
    // Coxeter factor: Cayley edges w -- w s
    for (int s = 0; s < g.size(); ++s) {
      if (!vset_contains(y & g.v2(), s)) continue;
      const int w2 = block.cox.mul_syllable(vx.w, s, 1);
      const int other = index.at({w2, vx.lambda, vx.star});
      if (static_cast<int>(k) < other)
        block.edges.push_back({static_cast<int>(k), other, s});
    }
    // cube factor: flip one coordinate up
    for (int v : block.yinf) {
      if (vset_contains(vx.lambda, v)) continue;
      const int other = index.at({vx.w, vset_with(vx.lambda, v), vx.star});
      block.edges.push_back({static_cast<int>(k), other, v});
    }
    // star factors: tip to center
    for (std::size_t i = 0; i < block.yp.size(); ++i) {
      if (vx.star[i] == -1) continue;
      auto st = vx.star;
      st[i] = -1;
      block.edges.push_back({static_cast<int>(k), index.at({vx.w, vx.lambda, st}),
                             block.yp[i]});
    }
  }
  return block;
}

scalar_t block_distance(const ElementaryBlock& block, const CoxeterPolytope& cox_polytope,
                        int va, int vb) {
  const auto& a = block.vertices[va];
  const auto& b = block.vertices[vb];
  scalar_t sq = 0;
  {
    const vector_t d = cox_polytope.points[a.w] - cox_polytope.points[b.w];
    sq += cox_polytope.rep.inner(d, d);
  }
  sq += static_cast<scalar_t>(vset_size(a.lambda ^ b.lambda));
  for (std::size_t i = 0; i < block.yp.size(); ++i) {
    if (a.star[i] == b.star[i]) continue;
    const bool center = a.star[i] == -1 || b.star[i] == -1;
    sq += center ? 1.0 : 4.0;  // tip-center 1, tip-tip 2 through the center
  }
  return std::sqrt(sq);
}

std::vector<std::pair<SyllableWord, vset_t>> vertex_bijection(const DyerGraph& g,
                                                              const ElementaryBlock& block,
                                                              const SyllableWord& base,
                                                              const ComplexOfGroups& cx,
                                                              const ReduceBudget& budget) {
  std::vector<std::pair<SyllableWord, vset_t>> out;
  out.reserve(block.vertices.size());
  for (const auto& vx : block.vertices) {
    SyllableWord w = concat(base, block.cox.word(vx.w));
    w = concat(w, omega_word(g, vx.lambda));
    vset_t z = 0;
    for (std::size_t i = 0; i < block.yp.size(); ++i) {
      if (vx.star[i] == -1)
        z = vset_with(z, block.yp[i]);
      else if (vx.star[i] > 0)
        w.push_back({block.yp[i], vx.star[i]});
    }
    out.emplace_back(coset_canonical_rep(g, w, cx.table_at(z), budget), z);
  }
  std::set<std::pair<vset_t, std::string>> seen;
  for (const auto& [rep, z] : out)
    if (!seen.insert({z, format_word(g, rep)}).second)
      throw domain_error("vertex_bijection: block map is not injective");
  return out;
}

std::optional<int> SigmaBall::find_vertex(vset_t x, const SyllableWord& rep) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].x == x && vertices[i].rep == rep) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> SigmaBall::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].a == a && edges[e].b == b) return static_cast<int>(e);
  return std::nullopt;
}

std::string SigmaBall::vertex_name(int v) const {
  return "(" + format_word(graph, vertices[v].rep) + "|" + subset_name(graph, vertices[v].x) +
         ")";
}

SigmaBall sigma_ball(const DyerGraph& g, int radius, const ReduceBudget& budget) {
  SigmaBall ball;
  ball.graph = g;
  ball.radius = radius;
  ball.dev = development_ball(g, radius, budget);
  const DyerScwol& s = ball.dev.cx.scwol;

  std::map<vset_t, int> tmpl_of;
  for (const auto& dv : ball.dev.vertices) {
    const vset_t y = s.verts[dv.xi];
    if (!tmpl_of.count(y)) {
      tmpl_of[y] = static_cast<int>(ball.templates.size());
      ball.templates.push_back(elementary_block(g, y));
      ball.template_y.push_back(y);
    }
  }

  struct Less {
    bool operator()(const std::pair<vset_t, SyllableWord>& a,
                    const std::pair<vset_t, SyllableWord>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return word_less(a.second, b.second);
    }
  };
  std::map<std::pair<vset_t, SyllableWord>, int, Less> vindex;
  std::map<std::pair<int, int>, int> eindex;

  for (std::size_t dvi = 0; dvi < ball.dev.vertices.size(); ++dvi) {
    const auto& dv = ball.dev.vertices[dvi];
    const vset_t y = s.verts[dv.xi];
    const int ti = tmpl_of.at(y);
    const ElementaryBlock& tmpl = ball.templates[ti];
    const auto images = vertex_bijection(g, tmpl, dv.rep, ball.dev.cx, budget);

    SigmaBall::Block block;
    block.dev_vertex = static_cast<int>(dvi);
    block.tmpl = ti;
    for (const auto& [rep, z] : images) {
      auto [it, fresh] = vindex.try_emplace({z, rep}, static_cast<int>(ball.vertices.size()));
      if (fresh) ball.vertices.push_back({rep, z, true});
      block.image.push_back(it->second);
    }
    for (const auto& e : tmpl.edges) {
      int a = block.image[e.a], b = block.image[e.b];
      if (a > b) std::swap(a, b);
      auto [it, fresh] = eindex.try_emplace({a, b}, static_cast<int>(ball.edges.size()));
      if (fresh)
        ball.edges.push_back({a, b, e.label});
      else if (ball.edges[it->second].label != e.label)
        throw std::logic_error("sigma_ball: edge label disagrees across blocks");
    }
    ball.blocks.push_back(std::move(block));
  }

  // interior = every block of Sigma containing the vertex is present, i.e.
  // the whole outgoing star of (rep, X) lies in the development ball
  struct DevLess {
    bool operator()(const std::pair<int, SyllableWord>& a,
                    const std::pair<int, SyllableWord>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return word_less(a.second, b.second);
    }
  };
  std::set<std::pair<int, SyllableWord>, DevLess> dev_present;
  for (const auto& dv : ball.dev.vertices) dev_present.insert({dv.xi, dv.rep});

  for (auto& vx : ball.vertices) {
    const int xi = s.vert_index(vx.x);
    vx.interior = dev_present.count({xi, vx.rep}) > 0;
    for (std::size_t xe = 0; xe < s.edges.size() && vx.interior; ++xe) {
      const XEdge& e = s.edges[xe];
      if (e.x != vx.x) continue;
      const int zi = s.vert_index(e.y);
      const SyllableWord target = coset_canonical_rep(
          g, concat(vx.rep, inverse(omega_word(g, e.omega))), ball.dev.cx.local[zi], budget);
      if (!dev_present.count({zi, target})) vx.interior = false;
    }
  }
  return ball;
}

bool LinkComplex::adjacent(int u, int v) const {
  if (labels[u] == labels[v]) return false;
  for (const auto& ch : chambers) {
    bool has_u = false, has_v = false;
    for (int w : ch) {
      has_u = has_u || w == u;
      has_v = has_v || w == v;
    }
    if (has_u && has_v) return true;
  }
  return false;
}

bool LinkComplex::spans(const std::vector<int>& clique) const {
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (labels[clique[i]] == labels[clique[j]]) return false;
  for (const auto& ch : chambers) {
    bool all = true;
    for (int v : clique)
      all = all && std::find(ch.begin(), ch.end(), v) != ch.end();
    if (all) return true;
  }
  return false;
}

LinkComplex vertex_link(const SigmaBall& ball, int sigma_vertex) {
  if (!ball.vertices[sigma_vertex].interior)
    throw domain_error("vertex_link: boundary vertex");
  const DyerGraph& g = ball.graph;
  LinkComplex lk;
  std::map<int, int> of_edge;  // sigma edge -> link vertex
  for (const auto& block : ball.blocks) {
    int tv = -1;
    for (std::size_t k = 0; k < block.image.size(); ++k)
      if (block.image[k] == sigma_vertex) tv = static_cast<int>(k);
    if (tv < 0) continue;
    const ElementaryBlock& tmpl = ball.templates[block.tmpl];
    std::vector<int> chamber;
    for (const auto& e : tmpl.edges) {
      if (e.a != tv && e.b != tv) continue;
      const int se = *ball.find_edge(block.image[e.a], block.image[e.b]);
      auto [it, fresh] = of_edge.try_emplace(se, static_cast<int>(lk.labels.size()));
      if (fresh) {
        lk.labels.push_back(ball.edges[se].label);
        const int other = ball.edges[se].a == sigma_vertex ? ball.edges[se].b : ball.edges[se].a;
        lk.names.push_back(g.id(ball.edges[se].label) + "->" + ball.vertex_name(other));
      }
      chamber.push_back(it->second);
    }
    std::sort(chamber.begin(), chamber.end());
    lk.chambers.push_back(std::move(chamber));
  }
  for (int u = 0; u < static_cast<int>(lk.labels.size()); ++u)
    for (int v = u + 1; v < static_cast<int>(lk.labels.size()); ++v)
      if (lk.adjacent(u, v))
        lk.edge_length[{u, v}] =
            M_PI - M_PI / static_cast<scalar_t>(g.m(lk.labels[u], lk.labels[v]));
  return lk;
}

namespace {

void enumerate_cliques(const LinkComplex& lk, std::vector<int>& current, int next,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (!current.empty()) visit(current);
  for (int v = next; v < static_cast<int>(lk.labels.size()); ++v) {
    bool ok = true;
    for (int u : current) ok = ok && lk.adjacent(u, v);
    if (!ok) continue;
    current.push_back(v);
    enumerate_cliques(lk, current, v + 1, visit);
    current.pop_back();
  }
}

}  // namespace

MetricFlagResult check_metric_flag(const LinkComplex& lk, scalar_t pivot_tol) {
  MetricFlagResult out;
  for (const auto& [pair, len] : lk.edge_length)
    if (len < M_PI / 2 - 1e-9) {
      out.all_edges_at_least_right = false;
      out.pass = false;
      out.witness = "edge (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                    ") shorter than pi/2";
      return out;
    }
  std::vector<int> current;
  enumerate_cliques(lk, current, 0, [&](const std::vector<int>& clique) {
    if (!out.pass) return;
    const int k = static_cast<int>(clique.size());
    matrix_t c(k, k);
    for (int i = 0; i < k; ++i) {
      c(i, i) = 1;
      for (int j = i + 1; j < k; ++j) {
        auto key = std::minmax(clique[i], clique[j]);
        c(i, j) = c(j, i) = std::cos(lk.edge_length.at({key.first, key.second}));
      }
    }
    const bool pd = positive_definite(c, pivot_tol);
    const bool spanned = lk.spans(clique);
    if (pd != spanned) {
      out.pass = false;
      out.witness = "clique {";
      for (int v : clique) out.witness += " " + std::to_string(v);
      out.witness += std::string(" } is ") + (spanned ? "spanned" : "not spanned") +
                     " but its cosine matrix is " + (pd ? "" : "not ") + "positive definite";
    }
  });
  return out;
}

Cat0Certificate certify_cat0(const DyerGraph& g, int radius, const ReduceBudget& budget,
                             scalar_t pivot_tol) {
  if (radius < 1) throw domain_error("certify_cat0: radius must be at least 1");
  const SigmaBall ball = sigma_ball(g, radius, budget);
  Cat0Certificate cert;
  cert.radius = radius;
  cert.pass = true;
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    if (!ball.vertices[v].interior) {
      ++cert.boundary_skipped;
      continue;
    }
    const LinkComplex lk = vertex_link(ball, static_cast<int>(v));
    const MetricFlagResult r = check_metric_flag(lk, pivot_tol);
    cert.entries.push_back(
        {static_cast<int>(v), r.all_edges_at_least_right, r.pass, r.witness});
    cert.pass = cert.pass && r.pass;
  }
  return cert;
}

std::string serialize_certificate(const SigmaBall& ball, const Cat0Certificate& cert) {
  std::ostringstream os;
  os << "radius: " << cert.radius << '\n';
  os << "interior vertices checked: " << cert.entries.size() << '\n';
  os << "boundary vertices skipped: " << cert.boundary_skipped << '\n';
  for (const auto& e : cert.entries) {
    os << (e.metric_flag_ok ? "pass" : "FAIL") << "  " << ball.vertex_name(e.vertex)
       << "  edges>=pi/2: " << (e.edge_lengths_ok ? "yes" : "no") << "  metric-flag: "
       << (e.metric_flag_ok ? "yes" : "no");
    if (!e.witness.empty()) os << "  (" << e.witness << ")";
    os << '\n';
  }
  os << "simple connectedness: by construction (simplicial subdivision by the development)\n";
  os << (cert.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::pair<int, int> dimension_stats(const DyerGraph& g) {
  int dim_sigma = 0, dim_w = 0;
  for (vset_t y : spherical_subsets(g)) {
    dim_sigma = std::max(dim_sigma, vset_size(y));
    dim_w = std::max(dim_w, vset_size(y) + vset_size(g.vp()) + vset_size(g.vinf() & ~y));
  }
  if (dim_sigma > dim_w) throw std::logic_error("dimension_stats: inequality violated");
  return {dim_sigma, dim_w};
}

std::string sigma_dot(const SigmaBall& ball) {
  std::ostringstream os;
  os << "graph sigma {\n";
  for (std::size_t v = 0; v < ball.vertices.size(); ++v)
    os << "  \"" << ball.vertex_name(static_cast<int>(v)) << "\";\n";
  for (const auto& e : ball.edges)
    os << "  \"" << ball.vertex_name(e.a) << "\" -- \"" << ball.vertex_name(e.b)
       << "\" [label=\"" << ball.graph.id(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

/// 2-cells of a block as vertex polygons: parabolic 2-faces of the Coxeter
/// factor (walked as the dihedral cycle w, ws, wst, ...) and commuting-move
/// squares mixing two factor coordinates.
std::vector<std::vector<int>> block_faces(const DyerGraph& g, const ElementaryBlock& tmpl,
                                          const CoxeterPolytope& cox) {
  std::vector<std::vector<int>> out;
  std::map<std::tuple<int, vset_t, std::vector<int>>, int> index;
  for (std::size_t k = 0; k < tmpl.vertices.size(); ++k)
    index[{tmpl.vertices[k].w, tmpl.vertices[k].lambda, tmpl.vertices[k].star}] =
        static_cast<int>(k);

  // dihedral 2-faces of the polytope factor, one copy per (lambda, star)
  std::vector<int> cox_gens;
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(tmpl.y & g.v2(), v)) cox_gens.push_back(v);
  for (const auto& face : cox.faces) {
    if (vset_size(face.t) != 2) continue;
    std::vector<int> gens;
    for (std::size_t i = 0; i < cox_gens.size(); ++i)
      if (vset_contains(face.t, static_cast<int>(i))) gens.push_back(cox_gens[i]);
    std::vector<int> cycle{face.coset_rep};
    for (int step = 0;; ++step) {
      const int next = tmpl.cox.mul_syllable(cycle.back(), gens[step % 2], 1);
      if (next == cycle.front()) break;
      cycle.push_back(next);
    }
    for (std::size_t k = 0; k < tmpl.vertices.size(); ++k) {
      const auto& vx = tmpl.vertices[k];
      if (vx.w != cycle.front()) continue;
      std::vector<int> poly;
      for (int w : cycle) poly.push_back(index.at({w, vx.lambda, vx.star}));
      out.push_back(std::move(poly));
    }
  }

  // commuting squares across different factor coordinates
  std::set<std::array<int, 4>> seen;
  struct Move {
    int kind;  // 0 cox, 1 cube, 2 star
    int coord;
  };
  for (std::size_t k = 0; k < tmpl.vertices.size(); ++k) {
    const auto& vx = tmpl.vertices[k];
    std::vector<Move> moves;
    for (int s : cox_gens) moves.push_back({0, s});
    for (int v : tmpl.yinf)
      if (!vset_contains(vx.lambda, v)) moves.push_back({1, v});
    for (std::size_t i = 0; i < tmpl.yp.size(); ++i)
      if (vx.star[i] != -1) moves.push_back({2, static_cast<int>(i)});
    auto apply = [&](ElementaryBlock::Vertex v, const Move& m) {
      if (m.kind == 0) v.w = tmpl.cox.mul_syllable(v.w, m.coord, 1);
      if (m.kind == 1) v.lambda = vset_with(v.lambda, m.coord);
      if (m.kind == 2) v.star[m.coord] = -1;
      return v;
    };
    for (std::size_t i = 0; i < moves.size(); ++i)
      for (std::size_t j = i + 1; j < moves.size(); ++j) {
        if (moves[i].kind == 0 && moves[j].kind == 0) continue;  // polytope faces above
        const auto b = apply(vx, moves[i]);
        const auto d = apply(vx, moves[j]);
        const auto c = apply(b, moves[j]);
        const std::vector<int> poly{static_cast<int>(k),
                                    index.at({b.w, b.lambda, b.star}),
                                    index.at({c.w, c.lambda, c.star}),
                                    index.at({d.w, d.lambda, d.star})};
        std::array<int, 4> key{poly[0], poly[1], poly[2], poly[3]};
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(poly);
      }
  }
  return out;
}

}  // namespace

std::string sigma_obj(const SigmaBall& ball) {
  const DyerGraph& g = ball.graph;

  // per-template local coordinates: polytope embedding, cube bits, planar star
  struct Layout {
    CoxeterPolytope cox;
    int dims = 0;
  };
  std::vector<Layout> layouts;
  for (std::size_t t = 0; t < ball.templates.size(); ++t) {
    const ElementaryBlock& tmpl = ball.templates[t];
    Layout lay{polytope(g.induced(tmpl.y & g.v2())), 0};
    lay.dims = g.induced(tmpl.y & g.v2()).size() + static_cast<int>(tmpl.yinf.size()) +
               2 * static_cast<int>(tmpl.yp.size());
    if (lay.dims > 3) throw domain_error("sigma_obj: block needs more than 3 coordinates");
    layouts.push_back(std::move(lay));
  }
  auto local_coords = [&](int ti, const ElementaryBlock::Vertex& vx) {
    const ElementaryBlock& tmpl = ball.templates[ti];
    const Layout& lay = layouts[ti];
    std::vector<scalar_t> c;
    {
      const Eigen::LLT<matrix_t> llt(lay.cox.rep.bilinear);
      const vector_t pt = llt.matrixU() * lay.cox.points[vx.w];
      for (Eigen::Index i = 0; i < pt.size(); ++i) c.push_back(pt(i));
    }
    for (int v : tmpl.yinf) c.push_back(vset_contains(vx.lambda, v) ? 1.0 : 0.0);
    for (std::size_t i = 0; i < tmpl.yp.size(); ++i) {
      if (vx.star[i] == -1) {
        c.push_back(0);
        c.push_back(0);
      } else {
        const scalar_t ang = 2 * M_PI * vx.star[i] / g.f(tmpl.yp[i]);
        c.push_back(std::cos(ang));
        c.push_back(std::sin(ang));
      }
    }
    c.resize(3, 0.0);
    return c;
  };

  // spanning-tree placement: translate each block so one shared vertex matches
  std::vector<std::array<scalar_t, 3>> shift(ball.blocks.size(), {0, 0, 0});
  std::vector<char> placed(ball.blocks.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> at_vertex(ball.vertices.size());
  for (std::size_t b = 0; b < ball.blocks.size(); ++b)
    for (std::size_t k = 0; k < ball.blocks[b].image.size(); ++k)
      at_vertex[ball.blocks[b].image[k]].push_back({static_cast<int>(b), static_cast<int>(k)});
  for (std::size_t root = 0; root < ball.blocks.size(); ++root) {
    if (placed[root]) continue;
    placed[root] = 1;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int b = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < ball.blocks[b].image.size(); ++k) {
        const int sv = ball.blocks[b].image[k];
        for (const auto& [b2, k2] : at_vertex[sv]) {
          if (placed[b2]) continue;
          const auto here = local_coords(ball.blocks[b].tmpl,
                                         ball.templates[ball.blocks[b].tmpl].vertices[k]);
          const auto there = local_coords(ball.blocks[b2].tmpl,
                                          ball.templates[ball.blocks[b2].tmpl].vertices[k2]);
          for (int i = 0; i < 3; ++i)
            shift[b2][i] = shift[b][i] + here[i] - there[i];
          placed[b2] = 1;
          queue.push_back(b2);
        }
      }
    }
  }

  std::ostringstream os;
  os << "# sigma ball, radius " << ball.radius << ", " << ball.blocks.size() << " blocks\n";
  std::vector<int> base(ball.blocks.size(), 0);
  int emitted = 0;
  for (std::size_t b = 0; b < ball.blocks.size(); ++b) {
    base[b] = emitted;
    os << "o block_" << b << "_" << subset_name(g, ball.template_y[ball.blocks[b].tmpl])
       << '\n';
    const ElementaryBlock& tmpl = ball.templates[ball.blocks[b].tmpl];
    for (const auto& vx : tmpl.vertices) {
      const auto c = local_coords(ball.blocks[b].tmpl, vx);
      os << "v " << (c[0] + shift[b][0]) << ' ' << (c[1] + shift[b][1]) << ' '
         << (c[2] + shift[b][2]) << '\n';
      ++emitted;
    }
    for (const auto& e : tmpl.edges)
      os << "l " << (base[b] + e.a + 1) << ' ' << (base[b] + e.b + 1) << '\n';
    for (const auto& poly : block_faces(g, tmpl, layouts[ball.blocks[b].tmpl].cox)) {
      os << "f";
      for (int k : poly) os << ' ' << (base[b] + k + 1);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace dyer
