#include "dyer/presentation.hpp"

#include <numeric>
#include <sstream>

namespace dyer {

namespace {

/// [a,b]_k = abab... (k letters), exponents 1.
SyllableWord alternating(int a, int b, int k) {
  SyllableWord w;
  for (int i = 0; i < k; ++i) w.push_back({i % 2 ? b : a, 1});
  return w;
}

}  // namespace

Presentation dyer_presentation(const DyerGraph& g) {
  Presentation p;
  p.generators = g.ids();
  for (int v = 0; v < g.size(); ++v)
    if (g.f(v) != kInf) p.relators.push_back({{v, g.f(v)}});
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) {
        const int m = g.m(u, v);
        p.relators.push_back(concat(alternating(u, v, m), inverse(alternating(v, u, m))));
      }
  return p;
}

Presentation coxeter_presentation(const DyerGraph& cox) {
  for (int v = 0; v < cox.size(); ++v)
    if (cox.f(v) != 2) throw domain_error("coxeter_presentation: vertex order is not 2");
  Presentation p;
  p.generators = cox.ids();
  for (int v = 0; v < cox.size(); ++v) p.relators.push_back({{v, 2}});
  for (int u = 0; u < cox.size(); ++u)
    for (int v = u + 1; v < cox.size(); ++v)
      if (cox.adjacent(u, v)) {
        SyllableWord w;
        for (int i = 0; i < cox.m(u, v); ++i) {
          w.push_back({u, 1});
          w.push_back({v, 1});
        }
        p.relators.push_back(std::move(w));
      }
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& gname : p.generators) os << ' ' << gname;
  os << '\n';
  for (const auto& r : p.relators) {
    os << "relator:";
    if (r.empty()) os << " e";
    for (const auto& s : r) {
      os << ' ' << p.generators[s.gen];
      if (s.exp != 1) os << '^' << s.exp;
    }
    os << '\n';
  }
  return os.str();
}

AbelianInvariants abelianization(const Presentation& p) {
  const int n = static_cast<int>(p.generators.size());
  const int m = static_cast<int>(p.relators.size());
  std::vector<std::vector<long long>> a(m, std::vector<long long>(n, 0));
  for (int i = 0; i < m; ++i)
    for (const auto& s : p.relators[i]) a[i][s.gen] += s.exp;

  // Smith normal form, smallest-pivot strategy.
  int rank = 0;
  std::vector<long long> diag;
  while (rank < m && rank < n) {
    // smallest nonzero entry of the remaining block becomes the pivot
    int pr = -1, pc = -1;
    for (int i = rank; i < m; ++i)
      for (int j = rank; j < n; ++j)
        if (a[i][j] != 0 &&
            (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[rank], a[pr]);
    for (int i = 0; i < m; ++i) std::swap(a[i][rank], a[i][pc]);

    bool clean = true;
    for (int i = rank + 1; i < m; ++i)
      if (a[i][rank] != 0) {
        const long long q = a[i][rank] / a[rank][rank];
        for (int j = rank; j < n; ++j) a[i][j] -= q * a[rank][j];
        clean = clean && a[i][rank] == 0;
      }
    for (int j = rank + 1; j < n; ++j)
      if (a[rank][j] != 0) {
        const long long q = a[rank][j] / a[rank][rank];
        for (int i = rank; i < m; ++i) a[i][j] -= q * a[i][rank];
        clean = clean && a[rank][j] == 0;
      }
    if (!clean) continue;  // a strictly smaller remainder exists; re-pivot

    // the pivot must divide the remaining block before we fix it
    bool divides = true;
    for (int i = rank + 1; i < m && divides; ++i)
      for (int j = rank + 1; j < n && divides; ++j)
        if (a[i][j] % a[rank][rank] != 0) {
          for (int jj = rank; jj < n; ++jj) a[rank][jj] += a[i][jj];
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(a[rank][rank]));
    ++rank;
  }

  // enforce divisibility d1 | d2 | ...
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const long long g = std::gcd(diag[i], diag[j]);
      const long long l = g == 0 ? 0 : diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }

  AbelianInvariants inv;
  int nonzero = 0;
  for (long long d : diag)
    if (d != 0) {
      ++nonzero;
      if (d > 1) inv.torsion.push_back(d);
    }
  inv.rank = n - nonzero;
  return inv;
}

}  // namespace dyer
