#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyer/ball.hpp"
#include "dyer/finite_group.hpp"
#include "dyer/rewrite.hpp"
#include "dyer/word.hpp"
#include "helpers.hpp"

#include <random>
#include <set>

using namespace dyer;
using dyer::testing::gamma43;

namespace {

SyllableWord w(const DyerGraph& g, const std::string& text) { return parse_word(g, text); }

}  // namespace

TEST_CASE("normalization") {
  const DyerGraph g = gamma43();
  CHECK(normalize(g, w(g, "d d d")).empty());
  CHECK(normalize(g, w(g, "d^2 d^2")) == w(g, "d"));
  CHECK(normalize(g, w(g, "a^3")) == w(g, "a^3"));
  CHECK(normalize(g, w(g, "b b")).empty());
  CHECK(normalize(g, w(g, "a^2 a^-2 c")) == w(g, "c"));
  // idempotent
  const auto n = normalize(g, w(g, "d^5 c c d"));
  CHECK(normalize(g, n) == n);
}

TEST_CASE("word io round trip") {
  const DyerGraph g = gamma43();
  CHECK(format_word(g, w(g, "a^-1 b d^2")) == "a^-1 b d^2");
  CHECK(format_word(g, {}) == "e");
  CHECK(parse_word(g, "e").empty());
  CHECK_THROWS_AS(parse_word(g, "z"), parse_error);
  CHECK_THROWS_AS(parse_word(g, "a^x"), parse_error);
}

TEST_CASE("tits reduction in the dihedral m = 4 group") {
  GraphSpec spec;
  spec.vertices = {{"b", 2}, {"c", 2}};
  spec.edges = {{"b", "c", 4}};
  const DyerGraph g = DyerGraph::validated(spec);
  CHECK(tits_reduce_coxeter(g, w(g, "b c b c b c b c")).empty());
  CHECK(tits_reduce_coxeter(g, w(g, "b b")).empty());
  CHECK(tits_reduce_coxeter(g, w(g, "b c b c b")) == w(g, "c b c"));
  CHECK_THROWS_AS(tits_reduce_coxeter(gamma43(), w(gamma43(), "b")), domain_error);
}

TEST_CASE("dyer reduction examples") {
  const DyerGraph g = gamma43();
  CHECK(dyer_reduce(g, w(g, "a b a^-1 b")).empty());
  CHECK(dyer_reduce(g, w(g, "d^2 c d")) == w(g, "c"));
  CHECK(dyer_reduce(g, w(g, "b c b c b")) == w(g, "c b c"));
  CHECK(is_trivial(g, w(g, "b c b c b c b c")));
  CHECK(is_trivial(g, {}));
  CHECK_FALSE(is_trivial(g, w(g, "a")));
}

TEST_CASE("packed and generic closures agree") {
  // The same graph with a decoy 17th vertex forces the generic path.
  GraphSpec small, big;
  small.vertices = {{"b", 2}, {"c", 2}, {"d", 3}};
  small.edges = {{"b", "c", 4}, {"c", "d", 2}};
  big = small;
  for (int i = 0; i < 15; ++i) big.vertices.push_back({"z" + std::to_string(i), 2});
  const DyerGraph gs = DyerGraph::validated(small);
  const DyerGraph gb = DyerGraph::validated(big);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> expd(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    SyllableWord word;
    const int len = trial % 7;
    for (int i = 0; i < len; ++i) {
      int e = expd(rng);
      if (e == 0) e = 1;
      word.push_back({pick(rng), e});
    }
    const auto a = dyer_reduce(gs, word);
    const auto b = dyer_reduce(gb, word);  // same indices: b, c, d sort first
    REQUIRE(a == b);
  }
}

TEST_CASE("dyer and tits reductions agree on V2 words") {
  GraphSpec spec;
  spec.vertices = {{"b", 2}, {"c", 2}, {"d", 2}};
  spec.edges = {{"b", "c", 4}, {"c", "d", 3}, {"b", "d", 2}};
  const DyerGraph g = DyerGraph::validated(spec);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    SyllableWord word;
    for (int i = 0; i < trial % 8; ++i) word.push_back({pick(rng), 1});
    CHECK(dyer_reduce(g, word) == tits_reduce_coxeter(g, word));
  }
}

TEST_CASE("budget errors") {
  const DyerGraph g = gamma43();
  ReduceBudget tight;
  tight.max_word_syllables = 3;
  CHECK_THROWS_AS(dyer_reduce(g, w(g, "b c b c b"), tight), search_budget_error);
}

TEST_CASE("finite group tables") {
  const DyerGraph g = gamma43();

  const auto dihedral = FiniteGroupTable::enumerate(g, g.subset_of({"b", "c"}));
  CHECK(dihedral.order() == 8);

  const auto cyclic = FiniteGroupTable::enumerate(g, g.subset_of({"d"}));
  CHECK(cyclic.order() == 3);

  const auto product = FiniteGroupTable::enumerate(g, g.subset_of({"c", "d"}));
  CHECK(product.order() == 6);

  // closure and inverses
  for (const auto& table : {dihedral, cyclic, product}) {
    for (int e = 0; e < static_cast<int>(table.order()); ++e) {
      CHECK(table.mul(table.identity(), e) == e);
      CHECK(table.mul(e, table.inverse(e)) == table.identity());
    }
  }

  CHECK_THROWS_AS(FiniteGroupTable::enumerate(g, g.subset_of({"b", "d"})), domain_error);
  CHECK_THROWS_AS(FiniteGroupTable::enumerate(g, g.subset_of({"a"})), domain_error);
  CHECK_THROWS_AS(FiniteGroupTable::enumerate(g, g.subset_of({"b", "c"}), 4), order_budget_error);
}

TEST_CASE("table multiplication matches word reduction") {
  const DyerGraph g = gamma43();
  const auto table = FiniteGroupTable::enumerate(g, g.subset_of({"b", "c"}));
  for (int x = 0; x < static_cast<int>(table.order()); ++x)
    for (int y = 0; y < static_cast<int>(table.order()); ++y) {
      const auto prod = dyer_reduce(g, concat(table.word(x), table.word(y)));
      CHECK(prod == dyer_reduce(g, table.word(table.mul(x, y))));
    }
}

TEST_CASE("ball enumeration") {
  const DyerGraph g = gamma43();
  const auto b0 = enumerate_ball(g, 0);
  CHECK(b0.elements.size() == 1);
  CHECK(b0.elements[0].empty());

  GraphSpec one;
  one.vertices = {{"d", 3}};
  const DyerGraph g1 = DyerGraph::validated(one);
  const auto b1 = enumerate_ball(g1, 1);
  CHECK(b1.elements.size() == 3);

  const auto ball1 = enumerate_ball(g, 1);
  std::set<std::string> got;
  for (const auto& e : ball1.elements) got.insert(format_word(g, e));
  CHECK(got == std::set<std::string>{"e", "a", "a^-1", "b", "c", "d", "d^2"});
}

TEST_CASE("ball monotonicity and prefix closure") {
  const DyerGraph g = gamma43();
  const auto b1 = enumerate_ball(g, 1);
  const auto b2 = enumerate_ball(g, 2);
  std::set<SyllableWord> big(b2.elements.begin(), b2.elements.end());
  for (const auto& e : b1.elements) CHECK(big.count(e) == 1);
  CHECK(b2.elements.size() > b1.elements.size());
}

TEST_CASE("coset canonical representatives") {
  const DyerGraph g = gamma43();
  const auto tb = FiniteGroupTable::enumerate(g, g.subset_of({"b"}));
  CHECK(coset_canonical_rep(g, w(g, "b"), tb).empty());
  CHECK(coset_canonical_rep(g, w(g, "a b"), tb) == w(g, "a"));

  const auto td = FiniteGroupTable::enumerate(g, g.subset_of({"d"}));
  CHECK(coset_canonical_rep(g, w(g, "c d"), td) == w(g, "c"));

  // constant on cosets, distinct across cosets
  const auto tbc = FiniteGroupTable::enumerate(g, g.subset_of({"b", "c"}));
  const auto base = w(g, "a c b");
  const auto rep = coset_canonical_rep(g, base, tbc);
  for (int d = 0; d < static_cast<int>(tbc.order()); ++d)
    CHECK(coset_canonical_rep(g, concat(base, tbc.word(d)), tbc) == rep);
  CHECK(coset_canonical_rep(g, w(g, "a^2 c b"), tbc) != rep);
}
