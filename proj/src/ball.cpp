#include "dyer/ball.hpp"

#include <algorithm>
#include <map>

namespace dyer {

BallEnumeration enumerate_ball(const DyerGraph& g, int radius, const ReduceBudget& budget) {
  if (radius < 0) throw domain_error("enumerate_ball: negative radius");

  std::vector<Syllable> steps;
  for (int v = 0; v < g.size(); ++v) {
    if (g.f(v) == kInf) {
      steps.push_back({v, 1});
      steps.push_back({v, -1});
    } else {
      for (int k = 1; k < g.f(v); ++k) steps.push_back({v, k});
    }
  }

  struct Less {
    bool operator()(const SyllableWord& a, const SyllableWord& b) const { return word_less(a, b); }
  };
  std::map<SyllableWord, int, Less> index;
  std::vector<SyllableWord> elems{{}};
  std::vector<int> parent{-1};
  index[{}] = 0;
  std::vector<int> frontier{0};
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<int> next;
    for (int e : frontier) {
      for (const Syllable& s : steps) {
        SyllableWord w = dyer_reduce(g, concat(elems[e], {s}), budget);
        auto [it, fresh] = index.try_emplace(std::move(w), static_cast<int>(elems.size()));
        if (fresh) {
          elems.push_back(it->first);
          parent.push_back(e);
          next.push_back(it->second);
        }
      }
    }
    frontier = std::move(next);
  }

  // Re-sort canonically, keeping parents consistent.
  std::vector<int> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return word_less(elems[a], elems[b]); });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  BallEnumeration ball;
  ball.radius = radius;
  ball.elements.resize(elems.size());
  ball.parent.resize(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    ball.elements[i] = elems[order[i]];
    const int p = parent[order[i]];
    ball.parent[i] = p < 0 ? -1 : rank[p];
  }
  return ball;
}

}  // namespace dyer
