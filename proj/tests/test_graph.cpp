#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyer/cosine.hpp"
#include "dyer/graph.hpp"
#include "helpers.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <set>

using namespace dyer;
using dyer::testing::gamma43;

TEST_CASE("gamma_{4,3} validates") {
  const DyerGraph g = gamma43();
  CHECK(g.size() == 4);
  CHECK(g.f(g.index_of("a")) == kInf);
  CHECK(g.f(g.index_of("d")) == 3);
  CHECK(g.m(g.index_of("b"), g.index_of("c")) == 4);
}

TEST_CASE("label constraint violations are reported with witnesses") {
  GraphSpec spec;
  spec.vertices = {{"u", 3}, {"v", 2}};
  spec.edges = {{"u", "v", 4}};
  auto issues = DyerGraph::check(spec);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == ValidationIssue::Kind::BadLabelConstraint);
  CHECK(issues[0].detail.find("'u'") != std::string::npos);

  // f = inf counts as f >= 3
  spec.vertices = {{"u", kInf}, {"v", 2}};
  spec.edges = {{"u", "v", 3}};
  issues = DyerGraph::check(spec);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == ValidationIssue::Kind::BadLabelConstraint);

  spec.edges = {{"u", "u", 2}};
  issues = DyerGraph::check(spec);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == ValidationIssue::Kind::NonSimplicial);
}

TEST_CASE("partition of gamma_{4,3}") {
  const DyerGraph g = gamma43();
  const auto part = partition(g);
  CHECK(g.subset_ids(part.v2) == std::vector<std::string>{"b", "c"});
  CHECK(g.subset_ids(part.vp) == std::vector<std::string>{"d"});
  CHECK(g.subset_ids(part.vinf) == std::vector<std::string>{"a"});
}

TEST_CASE("partition edge cases") {
  GraphSpec all2;
  all2.vertices = {{"x", 2}, {"y", 2}};
  auto g2 = DyerGraph::validated(all2);
  CHECK(partition(g2).v2 == g2.all_vertices());
  CHECK(partition(g2).vp == 0);

  GraphSpec allinf;
  allinf.vertices = {{"x", kInf}, {"y", kInf}};
  auto gi = DyerGraph::validated(allinf);
  CHECK(partition(gi).vinf == gi.all_vertices());
}

TEST_CASE("induced subgraph") {
  const DyerGraph g = gamma43();
  const auto sub = g.induced(g.subset_of({"b", "c"}));
  CHECK(sub.size() == 2);
  CHECK(sub.m(0, 1) == 4);
  CHECK(sub.f(0) == 2);
  CHECK(g.induced(0).size() == 0);
  CHECK(g.induced(g.all_vertices()).ids() == g.ids());
}

TEST_CASE("extended m") {
  const DyerGraph g = gamma43();
  const int b = g.index_of("b"), c = g.index_of("c"), d = g.index_of("d");
  CHECK(g.m(b, c) == 4);
  CHECK(g.m(b, d) == kInf);
  CHECK(g.m(b, b) == 1);
}

TEST_CASE("cosine matrix values") {
  const DyerGraph g = gamma43();
  const int b = g.index_of("b"), c = g.index_of("c"), d = g.index_of("d");
  const matrix_t m = cosine_matrix(g, std::vector<int>{b, c});
  CHECK(m(0, 0) == doctest::Approx(1.0));
  CHECK(m(0, 1) == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(m(1, 0) == doctest::Approx(m(0, 1)));

  const matrix_t s = cosine_matrix(g, std::vector<int>{d});
  CHECK(s(0, 0) == doctest::Approx(1.0));

  const matrix_t far = cosine_matrix(g, std::vector<int>{b, d});
  CHECK(far(0, 1) == doctest::Approx(-1.0));

  CHECK_THROWS_AS(cosine_matrix(g, std::vector<int>{b, b}), domain_error);
}

TEST_CASE("positive definiteness agrees with an eigenvalue oracle") {
  const DyerGraph g = gamma43();
  for (vset_t s = 0; s < (vset_t{1} << g.size()); ++s) {
    const matrix_t c = cosine_matrix(g, s);
    bool pd_eigen = true;
    if (c.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<matrix_t> es(c);
      pd_eigen = es.eigenvalues().minCoeff() > 1e-9;
    }
    CHECK(positive_definite(c) == pd_eigen);
  }
}

TEST_CASE("spherical subsets of gamma_{4,3} match the scwol vertex set") {
  const DyerGraph g = gamma43();
  const auto subs = spherical_subsets(g);
  std::set<std::vector<std::string>> got;
  for (vset_t s : subs) got.insert(g.subset_ids(s));
  const std::set<std::vector<std::string>> want = {
      {}, {"a"}, {"b"}, {"c"}, {"d"}, {"a", "b"}, {"b", "c"}, {"c", "d"}};
  CHECK(got == want);
}

TEST_CASE("spherical subset edge cases") {
  GraphSpec empty;
  CHECK(spherical_subsets(DyerGraph::validated(empty)).size() == 1);

  GraphSpec one;
  one.vertices = {{"v", 5}};
  CHECK(spherical_subsets(DyerGraph::validated(one)).size() == 2);

  const DyerGraph g = gamma43();
  CHECK(is_spherical(g, g.subset_of({"b", "c"})));
  CHECK(is_spherical(g, g.subset_of({"a", "b"})));
  CHECK_FALSE(is_spherical(g, g.subset_of({"b", "d"})));
}

TEST_CASE("downward closure and clique necessity") {
  const DyerGraph g = gamma43();
  const auto subs = spherical_subsets(g);
  const std::set<vset_t> all(subs.begin(), subs.end());
  for (vset_t s : subs) {
    for (int v = 0; v < g.size(); ++v)
      if (vset_contains(s, v)) CHECK(all.count(vset_without(s, v)) == 1);
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v)
        if (vset_contains(s, u) && vset_contains(s, v)) CHECK(g.adjacent(u, v));
  }
}

TEST_CASE("spherical test reduces to the V2 part on cliques") {
  const DyerGraph g = gamma43();
  for (vset_t c : cliques(g)) CHECK(is_spherical(g, c) == is_spherical(g, c & g.v2()));
}

TEST_CASE("graph json round trip") {
  const DyerGraph g = gamma43();
  const std::string text = serialize_graph_json(g);
  const DyerGraph back = DyerGraph::validated(parse_graph_json(text));
  CHECK(serialize_graph_json(back) == text);
  CHECK_THROWS_AS(parse_graph_json("{nope"), parse_error);
}
