#pragma once

#include "dyer/graph.hpp"

#include <string>
#include <vector>

namespace dyer {

/// One syllable x_v^e, v a vertex index, e a nonzero exponent.
struct Syllable {
  int gen = 0;
  int exp = 0;
  // container ordering; canonical comparisons go through syllable_less/word_less
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Words in the Dyer group as syllable sequences. In normal form adjacent
/// syllables have distinct generators and finite-order generators carry
/// exponents in {1, .., f(v)-1}.
using SyllableWord = std::vector<Syllable>;

/// Exponent ordering used by every canonical tie-break: positive exponents
/// ascending, then negative exponents ascending.
inline bool exp_less(int a, int b) {
  const bool na = a < 0, nb = b < 0;
  if (na != nb) return nb;
  return a < b;
}

bool syllable_less(const Syllable& a, const Syllable& b);

/// Word order: syllable count first, then lexicographic by syllable_less.
bool word_less(const SyllableWord& a, const SyllableWord& b);

/// Merges adjacent equal-generator syllables and reduces exponents modulo
/// f(v), dropping vanished syllables. Idempotent.
SyllableWord normalize(const DyerGraph& g, const SyllableWord& w);

SyllableWord inverse(const SyllableWord& w);
SyllableWord concat(const SyllableWord& a, const SyllableWord& b);

/// Serialized form: whitespace-separated tokens `v^k`, the exponent omitted
/// when 1. The empty word prints as "e".
std::string format_word(const DyerGraph& g, const SyllableWord& w);
SyllableWord parse_word(const DyerGraph& g, const std::string& text);

}  // namespace dyer
