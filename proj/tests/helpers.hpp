#pragma once

#include "dyer/graph.hpp"
#include "dyer/word.hpp"

#include <string>
#include <vector>

namespace dyer::testing {

/// The running example: a path a -- b -- c -- d with f = (inf, 2, 2, p) and
/// edge labels (2, m, 2).
inline DyerGraph gamma_mp(int m, int p) {
  GraphSpec spec;
  spec.vertices = {{"a", kInf}, {"b", 2}, {"c", 2}, {"d", p}};
  spec.edges = {{"a", "b", 2}, {"b", "c", m}, {"c", "d", 2}};
  return DyerGraph::validated(spec);
}

inline DyerGraph gamma43() { return gamma_mp(4, 3); }

inline std::vector<std::string> id_list(const DyerGraph& g, vset_t s) { return g.subset_ids(s); }

}  // namespace dyer::testing
