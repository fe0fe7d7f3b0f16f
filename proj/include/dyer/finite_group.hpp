#pragma once

#include "dyer/rewrite.hpp"
#include "dyer/word.hpp"

#include <cstddef>
#include <vector>

namespace dyer {

/// Multiplication table of a finite Dyer group D^f_X = D_{X2 u Xp}. Elements
/// are indexed 0..order-1 with 0 the identity; each carries a canonical word.
/// The Coxeter factor is enumerated through the canonical reflection
/// representation, the cyclic factors through exponent vectors.
class FiniteGroupTable {
 public:
  /// X must be spherical and meet no infinite-order vertex.
  static FiniteGroupTable enumerate(const DyerGraph& g, vset_t x, std::size_t max_order = 10'000);

  std::size_t order() const { return words_.size(); }
  vset_t subset() const { return subset_; }
  int identity() const { return 0; }
  const SyllableWord& word(int e) const { return words_[e]; }

  /// Right multiplication by the syllable x_v^k; v must lie in the subset.
  int mul_syllable(int e, int v, int k) const;
  /// Right multiplication by a word over the subset.
  int mul_word(int e, const SyllableWord& w) const;
  int mul(int a, int b) const { return mul_word(a, words_[b]); }
  int inverse(int e) const;

 private:
  vset_t subset_ = 0;
  std::vector<int> gens_;                  // subset vertices in index order
  std::vector<int> gen_slot_;              // graph vertex -> position in gens_, -1 otherwise
  std::vector<int> slot_f_;                // vertex order per slot
  std::vector<std::vector<int>> step_;     // step_[slot][e] = e * x_v
  std::vector<SyllableWord> words_;
};

/// Lexicographically least shortest word in the coset (gw) D^f_X. Constant on
/// left cosets; distinct cosets get distinct representatives.
SyllableWord coset_canonical_rep(const DyerGraph& g, const SyllableWord& gw,
                                 const FiniteGroupTable& table, const ReduceBudget& budget = {});

}  // namespace dyer
