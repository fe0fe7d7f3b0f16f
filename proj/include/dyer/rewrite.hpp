#pragma once

#include "dyer/word.hpp"

#include <cstddef>

namespace dyer {

struct ReduceBudget {
  std::size_t max_word_syllables = 24;
  std::size_t max_closure = 1'000'000;
};

/// Shortest representative of the same group element, computed by exhaustive
/// closure of the input under syllable normalization, syllable commutation
/// across m = 2 edges, and letter braid moves across m >= 3 edges. Returns
/// the lexicographically least word among those of minimal syllable length;
/// throws search_budget_error when a cap is hit.
SyllableWord dyer_reduce(const DyerGraph& g, const SyllableWord& w, const ReduceBudget& budget = {});

/// The Coxeter special case; requires every vertex order to be 2.
SyllableWord tits_reduce_coxeter(const DyerGraph& cox, const SyllableWord& w,
                                 const ReduceBudget& budget = {});

bool is_trivial(const DyerGraph& g, const SyllableWord& w, const ReduceBudget& budget = {});

/// Whether two words represent the same element.
bool same_element(const DyerGraph& g, const SyllableWord& a, const SyllableWord& b,
                  const ReduceBudget& budget = {});

}  // namespace dyer
