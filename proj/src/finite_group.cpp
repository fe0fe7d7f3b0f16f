#include "dyer/finite_group.hpp"

#include "dyer/cosine.hpp"

#include <cmath>
#include <deque>
#include <map>

namespace dyer {

namespace {

using key_t = std::vector<std::int64_t>;

key_t matrix_key(const matrix_t& m) {
  key_t k(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i)
    k[static_cast<std::size_t>(i)] = std::llround(m.data()[i] * 1e6);
  return k;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::enumerate(const DyerGraph& g, vset_t x,
                                             std::size_t max_order) {
  if (!is_spherical(g, x))
    throw domain_error("FiniteGroupTable: subset is not spherical");
  if (x & g.vinf())
    throw domain_error("FiniteGroupTable: subset contains an infinite-order vertex");

  FiniteGroupTable t;
  t.subset_ = x;
  t.gen_slot_.assign(g.size(), -1);
  std::vector<int> cox_gens, cyc_gens;
  for (int v = 0; v < g.size(); ++v) {
    if (!vset_contains(x, v)) continue;
    t.gen_slot_[v] = static_cast<int>(t.gens_.size());
    t.gens_.push_back(v);
    t.slot_f_.push_back(g.f(v));
    (g.f(v) == 2 ? cox_gens : cyc_gens).push_back(v);
  }

  // Coxeter factor via the canonical reflection representation; elements are
  // hashed on entries rounded to 1e-6. BFS in generator order makes the
  // stored words shortlex-minimal.
  const int nc = static_cast<int>(cox_gens.size());
  matrix_t bilinear(nc, nc);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      bilinear(i, j) = -std::cos(M_PI / g.m(cox_gens[i], cox_gens[j]));
  std::vector<matrix_t> rho(nc);
  for (int s = 0; s < nc; ++s) {
    rho[s] = matrix_t::Identity(nc, nc);
    for (int j = 0; j < nc; ++j) rho[s](s, j) -= 2 * bilinear(s, j);
  }

  std::vector<SyllableWord> cox_words{{}};
  std::vector<std::vector<int>> cox_step;
  {
    std::vector<matrix_t> elems{matrix_t::Identity(nc, nc)};
    std::map<key_t, int> index{{matrix_key(elems[0]), 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      if (static_cast<std::size_t>(e) >= cox_step.size()) cox_step.resize(e + 1);
      cox_step[e].assign(nc, -1);
      for (int s = 0; s < nc; ++s) {
        const matrix_t next = elems[e] * rho[s];
        auto [it, fresh] = index.try_emplace(matrix_key(next), static_cast<int>(elems.size()));
        if (fresh) {
          if (elems.size() >= max_order)
            throw order_budget_error("FiniteGroupTable: group order exceeds budget");
          elems.push_back(next);
          cox_words.push_back(concat(cox_words[e], {{cox_gens[s], 1}}));
          queue.push_back(it->second);
        }
        cox_step[e][s] = it->second;
      }
    }
    cox_step.resize(elems.size());
  }
  const std::size_t cox_order = cox_words.size();

  std::size_t cyc_order = 1;
  for (int v : cyc_gens) cyc_order *= static_cast<std::size_t>(g.f(v));
  const std::size_t order = cox_order * cyc_order;
  if (order > max_order) throw order_budget_error("FiniteGroupTable: group order exceeds budget");

  // Element index = cox * cyc_order + mixed-radix cyclic exponents, the first
  // cyclic generator least significant.
  auto cyc_digits = [&](std::size_t p) {
    std::vector<int> digits(cyc_gens.size(), 0);
    for (std::size_t k = 0; k < cyc_gens.size(); ++k) {
      const int f = g.f(cyc_gens[k]);
      digits[k] = static_cast<int>(p % static_cast<std::size_t>(f));
      p /= static_cast<std::size_t>(f);
    }
    return digits;
  };

  t.words_.resize(order);
  for (std::size_t c = 0; c < cox_order; ++c) {
    for (std::size_t p = 0; p < cyc_order; ++p) {
      SyllableWord w = cox_words[c];
      const auto digits = cyc_digits(p);
      for (std::size_t k = 0; k < cyc_gens.size(); ++k)
        if (digits[k] != 0) w.push_back({cyc_gens[k], digits[k]});
      t.words_[c * cyc_order + p] = std::move(w);
    }
  }

  t.step_.assign(t.gens_.size(), std::vector<int>(order, -1));
  for (std::size_t slot = 0; slot < t.gens_.size(); ++slot) {
    const int v = t.gens_[slot];
    if (g.f(v) == 2) {
      int cs = 0;
      for (std::size_t k = 0; k < cox_gens.size(); ++k)
        if (cox_gens[k] == v) cs = static_cast<int>(k);
      for (std::size_t e = 0; e < order; ++e) {
        const std::size_t c = e / cyc_order, p = e % cyc_order;
        t.step_[slot][e] = static_cast<int>(cox_step[c][cs] * cyc_order + p);
      }
    } else {
      std::size_t digit_radix = 1;
      for (std::size_t k = 0; cyc_gens[k] != v; ++k)
        digit_radix *= static_cast<std::size_t>(g.f(cyc_gens[k]));
      const std::size_t f = static_cast<std::size_t>(g.f(v));
      for (std::size_t e = 0; e < order; ++e) {
        const std::size_t p = e % cyc_order;
        const std::size_t digit = (p / digit_radix) % f;
        const std::size_t np = p - digit_radix * digit + digit_radix * ((digit + 1) % f);
        t.step_[slot][e] = static_cast<int>(e - p + np);
      }
    }
  }
  return t;
}

int FiniteGroupTable::mul_syllable(int e, int v, int k) const {
  const int slot = v >= 0 && v < static_cast<int>(gen_slot_.size()) ? gen_slot_[v] : -1;
  if (slot < 0) throw domain_error("FiniteGroupTable: generator outside subset");
  const int f = slot_f_[slot];
  int kk = k % f;
  if (kk < 0) kk += f;
  for (int i = 0; i < kk; ++i) e = step_[slot][e];
  return e;
}

int FiniteGroupTable::mul_word(int e, const SyllableWord& w) const {
  for (const Syllable& s : w) e = mul_syllable(e, s.gen, s.exp);
  return e;
}

int FiniteGroupTable::inverse(int e) const { return mul_word(identity(), dyer::inverse(words_[e])); }

SyllableWord coset_canonical_rep(const DyerGraph& g, const SyllableWord& gw,
                                 const FiniteGroupTable& table, const ReduceBudget& budget) {
  SyllableWord base = dyer_reduce(g, gw, budget);
  SyllableWord best;
  bool have = false;
  for (std::size_t d = 0; d < table.order(); ++d) {
    SyllableWord cand = dyer_reduce(g, concat(base, table.word(static_cast<int>(d))), budget);
    if (!have || word_less(cand, best)) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

}  // namespace dyer
