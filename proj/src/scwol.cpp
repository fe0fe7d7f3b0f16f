#include "dyer/scwol.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dyer {

int Scwol::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  throw domain_error("scwol: unknown vertex '" + id + "'");
}

int Scwol::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  throw domain_error("scwol: unknown edge '" + id + "'");
}

std::vector<std::string> check_scwol(const Scwol& s) {
  std::vector<std::string> issues;
  const int ne = static_cast<int>(s.edges.size());
  for (const auto& e : s.edges)
    if (e.iv == e.tv) issues.push_back("loop at edge " + e.id);
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b) {
      const bool composable = s.edges[a].iv == s.edges[b].tv;
      const auto it = s.compose.find({a, b});
      if (!composable) {
        if (it != s.compose.end())
          issues.push_back("compose defined on non-composable pair (" + s.edges[a].id + ", " +
                           s.edges[b].id + ")");
        continue;
      }
      if (it == s.compose.end()) {
        issues.push_back("compose missing on (" + s.edges[a].id + ", " + s.edges[b].id + ")");
        continue;
      }
      const auto& c = s.edges[it->second];
      if (c.iv != s.edges[b].iv || c.tv != s.edges[a].tv)
        issues.push_back("composition law fails on (" + s.edges[a].id + ", " + s.edges[b].id +
                         ")");
    }
  for (int a = 0; a < ne && issues.empty(); ++a)
    for (int b = 0; b < ne; ++b) {
      if (s.edges[a].iv != s.edges[b].tv) continue;
      for (int c = 0; c < ne; ++c) {
        if (s.edges[b].iv != s.edges[c].tv) continue;
        const int ab = s.compose.at({a, b});
        const int bc = s.compose.at({b, c});
        if (s.compose.at({ab, c}) != s.compose.at({a, bc})) {
          issues.push_back("associativity fails on (" + s.edges[a].id + ", " + s.edges[b].id +
                           ", " + s.edges[c].id + ")");
          break;
        }
      }
    }
  return issues;
}

Scwol scwol_from_poset(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& less) {
  Scwol s;
  s.vertices = elements;
  std::sort(s.vertices.begin(), s.vertices.end());
  const int n = static_cast<int>(s.vertices.size());
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : less) lt[s.vertex_index(a)][s.vertex_index(b)] = true;
  for (int i = 0; i < n; ++i)
    if (lt[i][i]) throw domain_error("scwol_from_poset: relation is not irreflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (lt[i][j] && lt[j][k] && !lt[i][k])
          throw domain_error("scwol_from_poset: relation is not transitive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt[i][j] && lt[j][i]) throw domain_error("scwol_from_poset: relation is not antisymmetric");

  std::map<std::pair<int, int>, int> edge_of;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (lt[b][a]) {
        edge_of[{b, a}] = static_cast<int>(s.edges.size());
        s.edges.push_back({"(" + s.vertices[b] + "<" + s.vertices[a] + ")", b, a, ""});
      }
  for (const auto& [pa, ea] : edge_of)
    for (const auto& [pb, eb] : edge_of)
      if (pa.first == pb.second)  // i(ea) = t(eb): eb then ea
        s.compose[{ea, eb}] = edge_of.at({pb.first, pa.second});
  return s;
}

Scwol scwol_product(const std::vector<Scwol>& factors) {
  const int n = static_cast<int>(factors.size());
  Scwol out;
  if (n == 0) {
    out.vertices.push_back("()");
    return out;
  }

  // vertices: all tuples
  std::vector<std::vector<int>> vtuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<int>> next;
    for (const auto& t : vtuples)
      for (int v = 0; v < static_cast<int>(f.vertices.size()); ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    vtuples = std::move(next);
  }
  std::map<std::vector<int>, int> vindex;
  for (const auto& t : vtuples) {
    std::string id;
    for (int i = 0; i < n; ++i) id += (i ? "|" : "") + factors[i].vertices[t[i]];
    vindex[t] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(id);
  }

  // edges: component is either a vertex (stationary) or a factor edge
  struct Comp {
    bool is_edge = false;
    int idx = 0;
  };
  std::vector<std::vector<Comp>> etuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<Comp>> next;
    for (const auto& t : etuples) {
      for (int v = 0; v < static_cast<int>(f.vertices.size()); ++v) {
        auto u = t;
        u.push_back({false, v});
        next.push_back(std::move(u));
      }
      for (int e = 0; e < static_cast<int>(f.edges.size()); ++e) {
        auto u = t;
        u.push_back({true, e});
        next.push_back(std::move(u));
      }
    }
    etuples = std::move(next);
  }
  std::map<std::vector<std::pair<bool, int>>, int> eindex;
  auto key_of = [](const std::vector<Comp>& t) {
    std::vector<std::pair<bool, int>> k;
    for (const auto& c : t) k.emplace_back(c.is_edge, c.idx);
    return k;
  };
  for (const auto& t : etuples) {
    bool any_edge = false;
    for (const auto& c : t) any_edge = any_edge || c.is_edge;
    if (!any_edge) continue;
    std::string id;
    std::vector<int> iv(n), tv(n);
    for (int i = 0; i < n; ++i) {
      if (t[i].is_edge) {
        id += (i ? "|" : "") + factors[i].edges[t[i].idx].id;
        iv[i] = factors[i].edges[t[i].idx].iv;
        tv[i] = factors[i].edges[t[i].idx].tv;
      } else {
        id += (i ? "|" : "") + std::string(".");
        iv[i] = tv[i] = t[i].idx;
      }
    }
    eindex[key_of(t)] = static_cast<int>(out.edges.size());
    out.edges.push_back({id, vindex.at(iv), vindex.at(tv), ""});
  }

  // composition componentwise, vertices acting as identities
  std::vector<std::vector<Comp>> elist;
  for (const auto& t : etuples) {
    bool any_edge = false;
    for (const auto& c : t) any_edge = any_edge || c.is_edge;
    if (any_edge) elist.push_back(t);
  }
  for (const auto& a : elist)
    for (const auto& b : elist) {
      std::vector<Comp> c(n);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const Comp& ca = a[i];
        const Comp& cb = b[i];
        if (ca.is_edge && cb.is_edge) {
          const auto it = factors[i].compose.find({ca.idx, cb.idx});
          if (it == factors[i].compose.end())
            ok = false;
          else
            c[i] = {true, it->second};
        } else if (ca.is_edge) {  // cb stationary at i(ca)
          ok = factors[i].edges[ca.idx].iv == cb.idx;
          c[i] = ca;
        } else if (cb.is_edge) {  // ca stationary at t(cb)
          ok = factors[i].edges[cb.idx].tv == ca.idx;
          c[i] = cb;
        } else {
          ok = ca.idx == cb.idx;
          c[i] = ca;
        }
      }
      if (!ok) continue;
      const int ea = eindex.at(key_of(a)), eb = eindex.at(key_of(b));
      if (out.edges[ea].iv != out.edges[eb].tv) continue;
      out.compose[{ea, eb}] = eindex.at(key_of(c));
    }
  return out;
}

bool same_scwol(const Scwol& a, const Scwol& b) {
  std::set<std::string> va(a.vertices.begin(), a.vertices.end());
  std::set<std::string> vb(b.vertices.begin(), b.vertices.end());
  if (va != vb) return false;
  auto etriples = [](const Scwol& s) {
    std::set<std::tuple<std::string, std::string, std::string>> t;
    for (const auto& e : s.edges) t.insert({e.id, s.vertices[e.iv], s.vertices[e.tv]});
    return t;
  };
  if (etriples(a) != etriples(b)) return false;
  auto ctriples = [](const Scwol& s) {
    std::set<std::tuple<std::string, std::string, std::string>> t;
    for (const auto& [pair, c] : s.compose)
      t.insert({s.edges[pair.first].id, s.edges[pair.second].id, s.edges[c].id});
    return t;
  };
  return ctriples(a) == ctriples(b);
}

Scwol sub_scwol(const Scwol& s, const std::vector<int>& vertex_subset) {
  Scwol out;
  std::vector<int> vmap(s.vertices.size(), -1);
  for (int v : vertex_subset) {
    vmap[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(s.vertices[v]);
  }
  std::vector<int> emap(s.edges.size(), -1);
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    if (vmap[s.edges[e].iv] >= 0 && vmap[s.edges[e].tv] >= 0) {
      emap[e] = static_cast<int>(out.edges.size());
      out.edges.push_back(
          {s.edges[e].id, vmap[s.edges[e].iv], vmap[s.edges[e].tv], s.edges[e].label});
    }
  for (const auto& [pair, c] : s.compose)
    if (emap[pair.first] >= 0 && emap[pair.second] >= 0 && emap[c] >= 0)
      out.compose[{emap[pair.first], emap[pair.second]}] = emap[c];
  return out;
}

std::string scwol_dot(const Scwol& s, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const auto& v : s.vertices) os << "  \"" << v << "\";\n";
  for (const auto& e : s.edges) {
    os << "  \"" << s.vertices[e.iv] << "\" -> \"" << s.vertices[e.tv] << "\"";
    if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dyer
