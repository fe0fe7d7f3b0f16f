#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyer/polytope.hpp"
#include "helpers.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace dyer;

namespace {

DyerGraph dihedral_graph(int m) {
  GraphSpec spec;
  spec.vertices = {{"b", 2}, {"c", 2}};
  spec.edges = {{"b", "c", m}};
  return DyerGraph::validated(spec);
}

DyerGraph a1xa1() {
  GraphSpec spec;
  spec.vertices = {{"s", 2}, {"t", 2}};
  spec.edges = {{"s", "t", 2}};
  return DyerGraph::validated(spec);
}

}  // namespace

TEST_CASE("reflection representation basics") {
  const DyerGraph g = dihedral_graph(4);
  const ReflectionRep rep = canonical_representation(g);
  CHECK(rep.bilinear(0, 1) == doctest::Approx(-std::cos(M_PI / 4)).epsilon(1e-12));
  CHECK(rep.bilinear(0, 0) == doctest::Approx(1.0));

  // rho(s)^2 = id and B-invariance
  for (const matrix_t& r : rep.rho) {
    CHECK(((r * r) - matrix_t::Identity(2, 2)).norm() < kRepTol);
    CHECK((r.transpose() * rep.bilinear * r - rep.bilinear).norm() < kRepTol);
  }
  // rho(s) alpha_s = -alpha_s
  vector_t alpha = vector_t::Zero(2);
  alpha(0) = 1;
  CHECK((rep.rho[0] * alpha + alpha).norm() < kRepTol);

  // commuting generators in A1 x A1
  const ReflectionRep sq = canonical_representation(a1xa1());
  CHECK((sq.rho[0] * sq.rho[1] - sq.rho[1] * sq.rho[0]).norm() < kRepTol);

  CHECK_THROWS_AS(canonical_representation(dyer::testing::gamma43()), domain_error);
  GraphSpec aff;  // infinite dihedral
  aff.vertices = {{"s", 2}, {"t", 2}};
  CHECK_THROWS_AS(canonical_representation(DyerGraph::validated(aff)), domain_error);
}

TEST_CASE("B-invariance under random words") {
  const DyerGraph g = dihedral_graph(6);
  const ReflectionRep rep = canonical_representation(g);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    SyllableWord w;
    for (int i = 0; i < 8; ++i) w.push_back({pick(rng), 1});
    const matrix_t m = rep.matrix_of(w);
    CHECK((m.transpose() * rep.bilinear * m - rep.bilinear).norm() < kRepTol);
  }
}

TEST_CASE("octagon: the I2(4) polytope") {
  const CoxeterPolytope p = polytope(dihedral_graph(4));
  CHECK(p.points.size() == 8);

  // all orbit points distinct
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b)
      CHECK((p.points[a] - p.points[b]).norm() > kPointTol);

  // every edge has B-length 2
  for (const auto& f : p.faces) {
    if (vset_size(f.t) != 1) continue;
    REQUIRE(f.elems.size() == 2);
    CHECK(p.rep.norm(p.points[f.elems[0]] - p.points[f.elems[1]]) ==
          doctest::Approx(2.0).epsilon(1e-9));
  }
  CHECK(face_poset_check(p));
}

TEST_CASE("polytope corner angles equal pi - pi/m") {
  for (int m : {2, 3, 4, 6}) {
    const CoxeterPolytope p = polytope(dihedral_graph(m));
    CHECK(p.points.size() == 2u * m);
    // edge directions at the base vertex x0 = point of the identity
    const vector_t d0 = p.points[p.table.mul_syllable(0, 0, 1)] - p.points[0];
    const vector_t d1 = p.points[p.table.mul_syllable(0, 1, 1)] - p.points[0];
    const scalar_t angle =
        std::acos(p.rep.inner(d0, d1) / (p.rep.norm(d0) * p.rep.norm(d1)));
    CHECK(angle == doctest::Approx(M_PI - M_PI / m).epsilon(1e-9));
    CHECK(face_poset_check(p));
  }
}

TEST_CASE("A1 polytope is a length-2 segment") {
  GraphSpec spec;
  spec.vertices = {{"s", 2}};
  const CoxeterPolytope p = polytope(DyerGraph::validated(spec));
  CHECK(p.points.size() == 2);
  CHECK(p.rep.norm(p.points[0] - p.points[1]) == doctest::Approx(2.0));
}

TEST_CASE("A1 x A1 polytope is a combinatorial square") {
  const CoxeterPolytope p = polytope(a1xa1());
  CHECK(p.points.size() == 4);
  int edges = 0, squares = 0;
  for (const auto& f : p.faces) {
    edges += vset_size(f.t) == 1;
    squares += vset_size(f.t) == 2;
  }
  CHECK(edges == 4);
  CHECK(squares == 1);
  CHECK(face_poset_check(p));
}

TEST_CASE("face poset endpoints") {
  const CoxeterPolytope p = polytope(dihedral_graph(4));
  int verts = 0;
  int whole = 0;
  for (const auto& f : p.faces) {
    if (f.t == 0) {
      ++verts;
      CHECK(f.elems.size() == 1);
    }
    if (f.t == p.rep.cox.all_vertices()) {
      ++whole;
      CHECK(f.elems.size() == p.table.order());
    }
  }
  CHECK(verts == 8);
  CHECK(whole == 1);
}

TEST_CASE("subpolytope translation") {
  const CoxeterPolytope p = polytope(dihedral_graph(4));
  const TranslationData whole = subpolytope_isometry(p, p.rep.cox.all_vertices());
  CHECK(whole.offset.norm() < kPointTol);
  CHECK(whole.max_error < kPointTol);

  const TranslationData point = subpolytope_isometry(p, 0);
  CHECK((point.offset - p.base_point).norm() < kPointTol);

  const TranslationData edge = subpolytope_isometry(p, vset_t{1});
  CHECK(edge.max_error < kPointTol);
}

TEST_CASE("obj output for a 2d polytope") {
  const CoxeterPolytope p = polytope(dihedral_graph(4));
  const std::string obj = polytope_obj(p);
  CHECK(obj.find("v ") != std::string::npos);
  CHECK(obj.find("f ") != std::string::npos);

  GraphSpec b3;
  b3.vertices = {{"x", 2}, {"y", 2}, {"z", 2}, {"w", 2}};
  b3.edges = {{"x", "y", 3}, {"y", "z", 3}, {"z", "w", 3}};
  CHECK_THROWS_AS(polytope_obj(polytope(DyerGraph::validated(b3))), domain_error);
}

TEST_CASE("face poset dump is keyed by representative words") {
  const CoxeterPolytope p = polytope(dihedral_graph(4));
  const std::string dump = face_poset_dump(p);
  CHECK(dump.find("face {b,c} coset e:") != std::string::npos);
  CHECK(dump.find("face {} coset e: e") != std::string::npos);
}
