#pragma once

#include "dyer/rewrite.hpp"
#include "dyer/word.hpp"

#include <vector>

namespace dyer {

/// Finite truncation of a Dyer group: all elements reachable from the
/// identity by at most `radius` steps, one step being right multiplication by
/// x_v^k with k in {1, .., f(v)-1} for finite f(v) and k in {-1, 1} for
/// infinite f(v). Elements are stored as canonical words.
struct BallEnumeration {
  int radius = 0;
  std::vector<SyllableWord> elements;  // sorted by word_less; parents follow this order
  std::vector<int> parent;             // BFS predecessor index, -1 for the identity
};

BallEnumeration enumerate_ball(const DyerGraph& g, int radius, const ReduceBudget& budget = {});

}  // namespace dyer
