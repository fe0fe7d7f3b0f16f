#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyer/embedding.hpp"
#include "dyer/sigma.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace dyer;
using dyer::testing::gamma43;

namespace {

DyerGraph single(const std::string& id, int f) {
  GraphSpec spec;
  spec.vertices = {{id, f}};
  return DyerGraph::validated(spec);
}

DyerGraph dihedral4() {
  GraphSpec spec;
  spec.vertices = {{"b", 2}, {"c", 2}};
  spec.edges = {{"b", "c", 4}};
  return DyerGraph::validated(spec);
}

std::multiset<std::string> link_labels(const DyerGraph& g, const LinkComplex& lk) {
  std::multiset<std::string> out;
  for (int l : lk.labels) out.insert(g.id(l));
  return out;
}

}  // namespace

TEST_CASE("elementary block vertex counts match the figures") {
  const DyerGraph g = gamma43();
  CHECK(elementary_block(g, g.subset_of({"a", "b"})).vertex_count() == 4);
  CHECK(elementary_block(g, g.subset_of({"b", "c"})).vertex_count() == 8);
  CHECK(elementary_block(g, g.subset_of({"c", "d"})).vertex_count() == 8);
  CHECK(elementary_block(g, 0).vertex_count() == 1);
  CHECK_THROWS_AS(elementary_block(g, g.subset_of({"b", "d"})), domain_error);
}

TEST_CASE("vertex bijection is injective and matches the in-star") {
  const DyerGraph g = gamma43();
  const DevelopmentBall dev = development_ball(g, 4);
  const ComplexOfGroups& cx = dev.cx;

  for (const std::string& yname : {"a,b", "b,c", "c,d"}) {
    std::vector<std::string> ids;
    for (std::size_t p = 0, q; p < yname.size(); p = q + 1) {
      q = yname.find(',', p);
      if (q == std::string::npos) q = yname.size();
      ids.push_back(yname.substr(p, q - p));
    }
    const vset_t y = g.subset_of(ids);
    const ElementaryBlock block = elementary_block(g, y);
    const auto images = vertex_bijection(g, block, {}, cx);
    CHECK(images.size() == block.vertex_count());

    // the image equals V_p(1 Y): in-star cosets with X inside Vp
    std::set<std::string> image_names;
    for (const auto& [rep, z] : images)
      image_names.insert(format_word(g, rep) + "|" + subset_name(g, z));
    std::set<std::string> star_names;
    const int yi = cx.scwol.vert_index(y);
    for (const auto& e : dev.edges) {
      if (dev.vertices[e.tgt].xi != yi || !dev.vertices[e.tgt].rep.empty()) continue;
      const auto& src = dev.vertices[e.src];
      if (cx.scwol.verts[src.xi] & ~g.vp()) continue;
      star_names.insert(format_word(g, src.rep) + "|" + subset_name(g, cx.scwol.verts[src.xi]));
    }
    if (y & ~g.vp()) {
      // gY itself is not a Sigma vertex here
    } else {
      star_names.insert("e|" + subset_name(g, y));
    }
    CHECK(image_names == star_names);
  }
}

TEST_CASE("specific bijection values") {
  const DyerGraph g = gamma43();
  const ComplexOfGroups cx = dyer_complex_of_groups(g);
  const ElementaryBlock block = elementary_block(g, g.subset_of({"a", "b"}));
  const auto images = vertex_bijection(g, block, {}, cx);
  std::set<std::string> names;
  for (const auto& [rep, z] : images)
    names.insert(format_word(g, rep) + "|" + subset_name(g, z));
  CHECK(names == std::set<std::string>{"e|{}", "b|{}", "a|{}", "a b|{}"});

  const ElementaryBlock dblock = elementary_block(g, g.subset_of({"d"}));
  const auto dimages = vertex_bijection(g, dblock, {}, cx);
  std::set<std::string> dnames;
  for (const auto& [rep, z] : dimages)
    dnames.insert(format_word(g, rep) + "|" + subset_name(g, z));
  CHECK(dnames == std::set<std::string>{"e|{}", "d|{}", "d^2|{}", "e|{d}"});
}

TEST_CASE("sigma ball of a finite cyclic group is the branched star") {
  const SigmaBall ball = sigma_ball(single("v", 3), 1);
  CHECK(ball.vertices.size() == 4);
  CHECK(ball.edges.size() == 3);
  int interior = 0;
  for (const auto& v : ball.vertices) interior += v.interior;
  CHECK(interior == 4);  // the whole complex is already there
}

TEST_CASE("sigma ball of I2(4) is the octagon") {
  const SigmaBall ball = sigma_ball(dihedral4(), 5);
  CHECK(ball.vertices.size() == 8);
  CHECK(ball.edges.size() == 8);
  // labels alternate b and c around the cycle
  std::map<int, std::multiset<std::string>> at;
  for (const auto& e : ball.edges) {
    at[e.a].insert(ball.graph.id(e.label));
    at[e.b].insert(ball.graph.id(e.label));
  }
  for (const auto& [v, labels] : at) CHECK(labels == std::multiset<std::string>{"b", "c"});
}

TEST_CASE("sigma ball of the infinite cyclic group is a path") {
  const SigmaBall ball = sigma_ball(single("v", kInf), 2);
  // blocks over the five ball elements reach one step past the rim
  CHECK(ball.vertices.size() == 6);
  CHECK(ball.edges.size() == 5);
  int interior = 0;
  for (const auto& v : ball.vertices) interior += v.interior;
  CHECK(interior == 4);  // the rim vertices v^-2 and v^3 lack a block
  for (const auto& e : ball.edges) CHECK(ball.graph.id(e.label) == "v");
}

TEST_CASE("edge labels follow the four cases") {
  const DyerGraph g = gamma43();
  const SigmaBall ball = sigma_ball(g, 2);
  const int b = g.index_of("b"), a = g.index_of("a"), d = g.index_of("d");

  const int origin = *ball.find_vertex(0, {});
  const int vb = *ball.find_vertex(0, {{b, 1}});
  const int va = *ball.find_vertex(0, {{a, 1}});
  const int vd_center = *ball.find_vertex(g.subset_of({"d"}), {});

  CHECK(ball.edges[*ball.find_edge(origin, vb)].label == b);
  CHECK(ball.edges[*ball.find_edge(origin, va)].label == a);
  CHECK(ball.edges[*ball.find_edge(origin, vd_center)].label == d);

  // the label characterization: same X and k^-1 l a V2 letter or a Vinf
  // letter; X growing or shrinking by one p-vertex with k^-1 l in <x_v>
  for (const auto& e : ball.edges) {
    const auto& va_ = ball.vertices[e.a];
    const auto& vb_ = ball.vertices[e.b];
    const SyllableWord diff = dyer_reduce(g, concat(inverse(va_.rep), vb_.rep));
    if (va_.x == vb_.x) {
      REQUIRE(diff.size() == 1);
      CHECK(diff[0].gen == e.label);
      if (vset_contains(g.v2(), e.label)) CHECK(diff[0].exp == 1);
    } else {
      const vset_t sym = va_.x ^ vb_.x;
      CHECK(vset_size(sym) == 1);
      CHECK(vset_contains(sym, e.label));
      CHECK(vset_contains(g.vp(), e.label));
      if (!diff.empty()) {
        REQUIRE(diff.size() == 1);
        CHECK(diff[0].gen == e.label);
      }
    }
  }
}

TEST_CASE("link of the identity vertex in gamma_{4,3}") {
  const DyerGraph g = gamma43();
  const SigmaBall ball = sigma_ball(g, 2);
  const int origin = *ball.find_vertex(0, {});
  REQUIRE(ball.vertices[origin].interior);
  const LinkComplex lk = vertex_link(ball, origin);
  CHECK(lk.labels.size() == 5);
  CHECK(link_labels(g, lk) == std::multiset<std::string>{"a", "a", "b", "c", "d"});

  // the b-c link edge has length 3 pi / 4
  int bi = -1, ci = -1;
  for (std::size_t i = 0; i < lk.labels.size(); ++i) {
    if (g.id(lk.labels[i]) == "b") bi = static_cast<int>(i);
    if (g.id(lk.labels[i]) == "c") ci = static_cast<int>(i);
  }
  const auto key = std::minmax(bi, ci);
  CHECK(lk.edge_length.at({key.first, key.second}) ==
        doctest::Approx(3 * M_PI / 4).epsilon(1e-12));

  CHECK(check_metric_flag(lk).pass);
}

TEST_CASE("link of a star center in gamma_{4,3}") {
  const DyerGraph g = gamma43();
  const SigmaBall ball = sigma_ball(g, 2);
  const int center = *ball.find_vertex(g.subset_of({"d"}), {});
  REQUIRE(ball.vertices[center].interior);
  const LinkComplex lk = vertex_link(ball, center);
  CHECK(lk.labels.size() == 4);
  CHECK(link_labels(g, lk) == std::multiset<std::string>{"c", "d", "d", "d"});
  CHECK(check_metric_flag(lk).pass);
  // same-label tips are not adjacent
  for (std::size_t u = 0; u < lk.labels.size(); ++u)
    for (std::size_t v = u + 1; v < lk.labels.size(); ++v)
      if (lk.labels[u] == lk.labels[v])
        CHECK_FALSE(lk.adjacent(static_cast<int>(u), static_cast<int>(v)));
}

TEST_CASE("boundary vertices are rejected") {
  const DyerGraph g = gamma43();
  const SigmaBall ball = sigma_ball(g, 1);
  // a^-1 sits on the rim of the radius-1 ball
  const int rim = *ball.find_vertex(0, {{g.index_of("a"), -1}});
  CHECK_FALSE(ball.vertices[rim].interior);
  CHECK_THROWS_AS(vertex_link(ball, rim), domain_error);
}

TEST_CASE("metric flag negative control: the affine triangle") {
  // three vertices pairwise at distance 2 pi / 3, no spanning 2-simplex:
  // the cosine matrix is singular, so the complex is metrically flag iff the
  // triangle is absent.
  LinkComplex lk;
  lk.labels = {0, 1, 2};
  lk.names = {"u", "v", "w"};
  lk.chambers = {{0, 1}, {1, 2}, {0, 2}};
  const scalar_t len = M_PI - M_PI / 3;
  lk.edge_length[{0, 1}] = len;
  lk.edge_length[{1, 2}] = len;
  lk.edge_length[{0, 2}] = len;
  CHECK(check_metric_flag(lk).pass);

  // declaring the triangle as spanned must fail the check
  LinkComplex bad = lk;
  bad.chambers = {{0, 1, 2}};
  const MetricFlagResult r = check_metric_flag(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("positive definite") != std::string::npos);

  // a too-short edge must fail the right-angle claim
  LinkComplex sharp;
  sharp.labels = {0, 1};
  sharp.names = {"u", "v"};
  sharp.chambers = {{0, 1}};
  sharp.edge_length[{0, 1}] = M_PI / 3;
  CHECK_FALSE(check_metric_flag(sharp).all_edges_at_least_right);
}

TEST_CASE("simplex existence law: cliques realized iff union is spherical") {
  const DyerGraph g = gamma43();
  const SigmaBall ball = sigma_ball(g, 2);
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    if (!ball.vertices[v].interior) continue;
    const LinkComplex lk = vertex_link(ball, static_cast<int>(v));
    const int n = static_cast<int>(lk.labels.size());
    for (vset_t mask = 1; mask < (vset_t{1} << n); ++mask) {
      std::vector<int> clique;
      for (int i = 0; i < n; ++i)
        if (vset_contains(mask, i)) clique.push_back(i);
      bool pairwise = true;
      for (std::size_t i = 0; i < clique.size() && pairwise; ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
          pairwise = pairwise && lk.adjacent(clique[i], clique[j]);
      if (!pairwise) continue;
      vset_t labels = ball.vertices[v].x;
      for (int i : clique) labels = vset_with(labels, lk.labels[i]);
      CHECK(lk.spans(clique) == is_spherical(g, labels));
    }
  }
}

TEST_CASE("gluing preserves distances of identified vertex pairs") {
  const DyerGraph g = gamma43();
  const SigmaBall ball = sigma_ball(g, 2);
  std::map<vset_t, CoxeterPolytope> polytopes;
  for (std::size_t t = 0; t < ball.templates.size(); ++t)
    polytopes.emplace(ball.template_y[t], polytope(g.induced(ball.template_y[t] & g.v2())));

  // for every pair of sigma vertices shared by two blocks, the block-internal
  // distances agree
  int compared = 0;
  for (std::size_t b1 = 0; b1 < ball.blocks.size(); ++b1)
    for (std::size_t b2 = b1 + 1; b2 < ball.blocks.size(); ++b2) {
      const auto& A = ball.blocks[b1];
      const auto& B = ball.blocks[b2];
      std::vector<std::pair<int, int>> shared;  // (template vertex in A, in B)
      for (std::size_t i = 0; i < A.image.size(); ++i)
        for (std::size_t j = 0; j < B.image.size(); ++j)
          if (A.image[i] == B.image[j]) shared.push_back({static_cast<int>(i), static_cast<int>(j)});
      for (std::size_t p = 0; p < shared.size(); ++p)
        for (std::size_t q = p + 1; q < shared.size(); ++q) {
          const scalar_t da =
              block_distance(ball.templates[A.tmpl], polytopes.at(ball.template_y[A.tmpl]),
                             shared[p].first, shared[q].first);
          const scalar_t db =
              block_distance(ball.templates[B.tmpl], polytopes.at(ball.template_y[B.tmpl]),
                             shared[p].second, shared[q].second);
          CHECK(da == doctest::Approx(db).epsilon(1e-9));
          ++compared;
        }
    }
  CHECK(compared > 0);
}

TEST_CASE("the edge labeling is invariant under translation") {
  const DyerGraph g = gamma43();
  const SigmaBall small = sigma_ball(g, 1);
  const SigmaBall big = sigma_ball(g, 2);
  const SyllableWord shift{{g.index_of("b"), 1}};
  for (const auto& e : small.edges) {
    const auto& u = small.vertices[e.a];
    const auto& v = small.vertices[e.b];
    const auto& table_u = big.dev.cx.local[big.dev.cx.scwol.vert_index(u.x)];
    const auto& table_v = big.dev.cx.local[big.dev.cx.scwol.vert_index(v.x)];
    const auto su = coset_canonical_rep(g, concat(shift, u.rep), table_u);
    const auto sv = coset_canonical_rep(g, concat(shift, v.rep), table_v);
    const auto iu = big.find_vertex(u.x, su);
    const auto iv = big.find_vertex(v.x, sv);
    REQUIRE(iu.has_value());
    REQUIRE(iv.has_value());
    const auto ie = big.find_edge(*iu, *iv);
    REQUIRE(ie.has_value());
    CHECK(big.edges[*ie].label == e.label);
  }
}

TEST_CASE("davis specialization: all-f=2 one-skeleton is the Cayley graph") {
  // the Dyer graph of the Coxeter group A3: commuting pairs carry an m = 2
  // edge, a missing edge would mean no relation at all
  GraphSpec spec;
  spec.vertices = {{"x", 2}, {"y", 2}, {"z", 2}};
  spec.edges = {{"x", "y", 3}, {"y", "z", 3}, {"x", "z", 2}};
  const DyerGraph g = DyerGraph::validated(spec);
  const SigmaBall ball = sigma_ball(g, 12);
  CHECK(ball.vertices.size() == 24);  // |A3| = 24
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    std::multiset<std::string> labels;
    for (const auto& e : ball.edges)
      if (e.a == static_cast<int>(v) || e.b == static_cast<int>(v))
        labels.insert(g.id(e.label));
    CHECK(labels == std::multiset<std::string>{"x", "y", "z"});
  }
  const Cat0Certificate cert = certify_cat0(g, 12);
  CHECK(cert.pass);
  CHECK(cert.entries.size() == 24);
}

TEST_CASE("salvetti specialization: all-f=infinity blocks are the cube sets") {
  GraphSpec spec;
  spec.vertices = {{"x", kInf}, {"y", kInf}};
  spec.edges = {{"x", "y", 2}};
  const DyerGraph g = DyerGraph::validated(spec);
  const SigmaBall ball = sigma_ball(g, 2);

  // every block vertex set is g C(V') for the square / edges / points
  for (const auto& block : ball.blocks) {
    const vset_t y = ball.template_y[block.tmpl];
    const auto& base = ball.dev.vertices[block.dev_vertex].rep;
    std::set<std::string> got;
    for (int sv : block.image) got.insert(format_word(g, ball.vertices[sv].rep));
    std::set<std::string> want;
    for (vset_t lam = 0;; lam = (lam - y) & y) {
      SyllableWord w = base;
      for (int v = 0; v < g.size(); ++v)
        if (vset_contains(lam, v)) w.push_back({v, 1});
      want.insert(format_word(g, dyer_reduce(g, w)));
      if (lam == y) break;
    }
    CHECK(got == want);
  }

  // all-right links at interior vertices
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    if (!ball.vertices[v].interior) continue;
    const LinkComplex lk = vertex_link(ball, static_cast<int>(v));
    for (const auto& [pair, len] : lk.edge_length)
      CHECK(len == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(check_metric_flag(lk).pass);
  }
}

TEST_CASE("certification of gamma_{4,3} at radius 2") {
  const Cat0Certificate cert = certify_cat0(gamma43(), 2);
  CHECK(cert.pass);
  CHECK(cert.entries.size() > 0);
  CHECK(cert.boundary_skipped > 0);
  for (const auto& e : cert.entries) {
    CHECK(e.edge_lengths_ok);
    CHECK(e.metric_flag_ok);
  }
}

TEST_CASE("dimension statistics") {
  const DyerGraph g = gamma43();
  const auto [dim_sigma, dim_w] = dimension_stats(g);
  CHECK(dim_sigma == 2);
  CHECK(dim_w == 4);

  const auto [d1, d2] = dimension_stats(single("v", 2));
  CHECK(d1 == 1);
  CHECK(d2 == 1);
}

TEST_CASE("dim Sigma(W) matches the spherical subsets of Lambda") {
  for (const DyerGraph& g : {gamma43(), dyer::testing::gamma_mp(3, 2)}) {
    const DyerGraph lam = lambda_graph(g);
    int max_lambda = 0;
    for (vset_t s : spherical_subsets(lam)) max_lambda = std::max(max_lambda, vset_size(s));
    CHECK(dimension_stats(g).second == max_lambda);
  }
}

TEST_CASE("emitters produce plausible output") {
  const SigmaBall ball = sigma_ball(gamma43(), 1);
  const std::string dot = sigma_dot(ball);
  CHECK(dot.find("graph sigma {") == 0);
  CHECK(dot.find("label=\"b\"") != std::string::npos);

  const std::string obj = sigma_obj(ball);
  CHECK(obj.find("v ") != std::string::npos);
  CHECK(obj.find("f ") != std::string::npos);
}
