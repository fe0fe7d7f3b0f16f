#include "dyer/rewrite.hpp"

#include <array>
#include <cstring>
#include <deque>
#include <unordered_set>

namespace dyer {

namespace {

// ---------------------------------------------------------------------------
// Packed path: words of at most 16 syllables over at most 16 generators, all
// of finite order <= 8. One byte per syllable, (gen << 4) | (exp + 8); a zero
// byte never encodes a syllable, so zero padding marks the end.
// ---------------------------------------------------------------------------

struct PackedWord {
  std::uint64_t lo = 0, hi = 0;
  friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

struct PackedHash {
  std::size_t operator()(const PackedWord& w) const {
    std::uint64_t x = (w.lo ^ 0x9E3779B97F4A7C15ull) * 0xBF58476D1CE4E5B9ull;
    x ^= x >> 31;
    x += (w.hi ^ 0x94D049BB133111EBull) * 0x2545F4914F6CDD1Dull;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

struct SmallWord {
  int len = 0;
  std::array<std::int8_t, 16> gen{};
  std::array<std::int8_t, 16> exp{};

  PackedWord pack() const {
    std::array<std::uint8_t, 16> b{};
    for (int i = 0; i < len; ++i)
      b[i] = static_cast<std::uint8_t>((gen[i] << 4) | (exp[i] + 8));
    PackedWord p;
    std::memcpy(&p.lo, b.data(), 8);
    std::memcpy(&p.hi, b.data() + 8, 8);
    return p;
  }

  static SmallWord unpack(const PackedWord& p) {
    std::array<std::uint8_t, 16> b{};
    std::memcpy(b.data(), &p.lo, 8);
    std::memcpy(b.data() + 8, &p.hi, 8);
    SmallWord w;
    for (int i = 0; i < 16 && b[i]; ++i) {
      w.gen[i] = static_cast<std::int8_t>(b[i] >> 4);
      w.exp[i] = static_cast<std::int8_t>(static_cast<int>(b[i] & 0xF) - 8);
      w.len = i + 1;
    }
    return w;
  }
};

struct SmallOps {
  std::array<std::int8_t, 16> f{};       // vertex order, 0 when unusable
  std::array<std::int16_t, 256> m{};     // extended m, 0 for non-adjacent pairs

  int pair_m(int u, int v) const { return m[(u << 4) | v]; }

  void normalize(SmallWord& w) const {
    int out = 0;
    for (int i = 0; i < w.len; ++i) {
      int g = w.gen[i];
      int e = w.exp[i];
      while (out > 0 && w.gen[out - 1] == g) {
        e += w.exp[--out];
      }
      e %= f[g];
      if (e < 0) e += f[g];
      if (e != 0) {
        w.gen[out] = static_cast<std::int8_t>(g);
        w.exp[out] = static_cast<std::int8_t>(e);
        ++out;
      }
    }
    for (int i = out; i < w.len; ++i) {
      w.gen[i] = 0;
      w.exp[i] = 0;
    }
    w.len = out;
  }

  // Canonical order: length, then (gen, exponent-key) lexicographic.
  bool less(const SmallWord& a, const SmallWord& b) const {
    if (a.len != b.len) return a.len < b.len;
    for (int i = 0; i < a.len; ++i) {
      if (a.gen[i] != b.gen[i]) return a.gen[i] < b.gen[i];
      if (a.exp[i] != b.exp[i]) return exp_less(a.exp[i], b.exp[i]);
    }
    return false;
  }

  template <class Push>
  void neighbors(const SmallWord& w, Push push) const {
    SmallWord n;
    for (int i = 0; i + 1 < w.len; ++i) {
      if (pair_m(w.gen[i], w.gen[i + 1]) == 2) {
        n = w;
        std::swap(n.gen[i], n.gen[i + 1]);
        std::swap(n.exp[i], n.exp[i + 1]);
        normalize(n);
        push(n);
      }
    }
    for (int i = 0; i + 1 < w.len; ++i) {
      const int u = w.gen[i], v = w.gen[i + 1];
      const int mm = pair_m(u, v);
      if (mm < 3 || i + mm > w.len) continue;
      bool alternating = true;
      for (int k = 2; k < mm && alternating; ++k)
        alternating = w.gen[i + k] == (k % 2 ? v : u);
      if (!alternating) continue;
      n = w;
      for (int k = 0; k < mm; ++k) n.gen[i + k] = static_cast<std::int8_t>(k % 2 ? u : v);
      normalize(n);
      push(n);
    }
  }
};

SyllableWord to_word(const SmallWord& w) {
  SyllableWord out;
  out.reserve(w.len);
  for (int i = 0; i < w.len; ++i) out.push_back({w.gen[i], w.exp[i]});
  return out;
}

SyllableWord small_reduce(const SmallOps& ops, SmallWord start, std::size_t max_closure) {
  ops.normalize(start);
  SmallWord best = start;
  std::unordered_set<PackedWord, PackedHash> visited;
  visited.reserve(1024);
  visited.insert(start.pack());
  std::deque<PackedWord> queue{start.pack()};
  while (!queue.empty()) {
    const SmallWord w = SmallWord::unpack(queue.front());
    queue.pop_front();
    ops.neighbors(w, [&](const SmallWord& n) {
      if (!visited.insert(n.pack()).second) return;
      if (visited.size() > max_closure)
        throw search_budget_error("dyer_reduce: closure size exceeded budget");
      if (ops.less(n, best)) best = n;
      queue.push_back(n.pack());
    });
  }
  return to_word(best);
}

// ---------------------------------------------------------------------------
// Generic path, same moves over SyllableWord states.
// ---------------------------------------------------------------------------

struct WordHash {
  std::size_t operator()(const SyllableWord& w) const {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const Syllable& s : w) {
      h = (h ^ static_cast<std::uint64_t>(s.gen)) * 0x100000001B3ull;
      h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.exp))) * 0x100000001B3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

SyllableWord generic_reduce(const DyerGraph& g, SyllableWord start, std::size_t max_closure) {
  SyllableWord best = start;
  std::unordered_set<SyllableWord, WordHash> visited;
  visited.insert(start);
  std::deque<SyllableWord> queue{std::move(start)};
  auto push = [&](SyllableWord n) {
    if (!visited.insert(n).second) return;
    if (visited.size() > max_closure)
      throw search_budget_error("dyer_reduce: closure size exceeded budget");
    if (word_less(n, best)) best = n;
    queue.push_back(std::move(n));
  };
  while (!queue.empty()) {
    const SyllableWord w = std::move(queue.front());
    queue.pop_front();
    const int len = static_cast<int>(w.size());
    for (int i = 0; i + 1 < len; ++i) {
      if (g.m(w[i].gen, w[i + 1].gen) == 2) {
        SyllableWord n = w;
        std::swap(n[i], n[i + 1]);
        push(normalize(g, n));
      }
    }
    for (int i = 0; i + 1 < len; ++i) {
      const int u = w[i].gen, v = w[i + 1].gen;
      const int mm = g.m(u, v);
      if (mm == kInf || mm < 3 || i + mm > len) continue;
      bool alternating = true;
      for (int k = 2; k < mm && alternating; ++k)
        alternating = w[i + k].gen == (k % 2 ? v : u);
      if (!alternating) continue;
      SyllableWord n = w;
      for (int k = 0; k < mm; ++k) n[i + k].gen = k % 2 ? u : v;
      push(normalize(g, n));
    }
  }
  return best;
}

bool packable(const DyerGraph& g, const SyllableWord& w) {
  if (g.size() > 16 || w.size() > 16) return false;
  for (const Syllable& s : w) {
    const int f = g.f(s.gen);
    if (f == kInf || f > 8) return false;
  }
  return true;
}

}  // namespace

SyllableWord dyer_reduce(const DyerGraph& g, const SyllableWord& w, const ReduceBudget& budget) {
  SyllableWord start = normalize(g, w);
  if (start.size() > budget.max_word_syllables)
    throw search_budget_error("dyer_reduce: word length exceeds budget");
  if (packable(g, start)) {
    SmallOps ops;
    for (int v = 0; v < g.size(); ++v)
      ops.f[v] = static_cast<std::int8_t>(g.f(v) == kInf ? 0 : std::min(g.f(v), 127));
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v)
        if (u != v && g.adjacent(u, v))
          ops.m[(u << 4) | v] = static_cast<std::int16_t>(g.m(u, v));
    SmallWord s;
    s.len = static_cast<int>(start.size());
    for (int i = 0; i < s.len; ++i) {
      s.gen[i] = static_cast<std::int8_t>(start[i].gen);
      s.exp[i] = static_cast<std::int8_t>(start[i].exp);
    }
    return small_reduce(ops, s, budget.max_closure);
  }
  return generic_reduce(g, std::move(start), budget.max_closure);
}

SyllableWord tits_reduce_coxeter(const DyerGraph& cox, const SyllableWord& w,
                                 const ReduceBudget& budget) {
  for (int v = 0; v < cox.size(); ++v)
    if (cox.f(v) != 2) throw domain_error("tits_reduce_coxeter: vertex order is not 2");
  return dyer_reduce(cox, w, budget);
}

bool is_trivial(const DyerGraph& g, const SyllableWord& w, const ReduceBudget& budget) {
  return dyer_reduce(g, w, budget).empty();
}

bool same_element(const DyerGraph& g, const SyllableWord& a, const SyllableWord& b,
                  const ReduceBudget& budget) {
  return dyer_reduce(g, a, budget) == dyer_reduce(g, b, budget);
}

}  // namespace dyer
