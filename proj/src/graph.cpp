#include "dyer/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dyer {

std::string to_string(const ValidationIssue& issue) {
  using K = ValidationIssue::Kind;
  const char* tag = "";
  switch (issue.kind) {
    case K::NonSimplicial: tag = "NonSimplicial"; break;
    case K::BadLabelConstraint: tag = "BadLabelConstraint"; break;
    case K::MissingLabel: tag = "MissingLabel"; break;
    case K::UnknownVertex: tag = "UnknownVertex"; break;
    case K::TooLarge: tag = "TooLarge"; break;
  }
  return std::string(tag) + ": " + issue.detail;
}

validation_error::validation_error(std::vector<ValidationIssue> is)
    : domain_error([&is] {
        std::ostringstream os;
        os << "invalid Dyer graph (" << is.size() << " issue(s))";
        for (const auto& i : is) os << "\n  " << to_string(i);
        return os.str();
      }()),
      issues(std::move(is)) {}

std::vector<ValidationIssue> DyerGraph::check(const GraphSpec& spec) {
  using K = ValidationIssue::Kind;
  std::vector<ValidationIssue> issues;
  std::map<std::string, int> f_of;
  for (const auto& v : spec.vertices) {
    if (v.id.empty()) issues.push_back({K::MissingLabel, "vertex with empty id"});
    if (f_of.count(v.id))
      issues.push_back({K::NonSimplicial, "duplicate vertex id '" + v.id + "'"});
    if (v.f != kInf && v.f < 2)
      issues.push_back({K::MissingLabel, "vertex '" + v.id + "' has f < 2"});
    f_of[v.id] = v.f;
  }
  if (f_of.size() > kMaxVertices)
    issues.push_back({K::TooLarge, "more than 64 vertices"});
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : spec.edges) {
    if (!f_of.count(e.u)) issues.push_back({K::UnknownVertex, "edge endpoint '" + e.u + "'"});
    if (!f_of.count(e.v)) issues.push_back({K::UnknownVertex, "edge endpoint '" + e.v + "'"});
    if (e.u == e.v) {
      issues.push_back({K::NonSimplicial, "loop at '" + e.u + "'"});
      continue;
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      issues.push_back({K::NonSimplicial, "duplicate edge {" + e.u + "," + e.v + "}"});
      continue;
    }
    if (e.m == kInf || e.m < 2) {
      issues.push_back({K::MissingLabel, "edge {" + e.u + "," + e.v + "} has m < 2"});
      continue;
    }
    for (const auto& id : {e.u, e.v}) {
      auto it = f_of.find(id);
      if (it != f_of.end() && it->second >= 3 && e.m != 2)
        issues.push_back({K::BadLabelConstraint, "edge {" + e.u + "," + e.v + "} labeled " +
                                                     std::to_string(e.m) + " touches '" + id +
                                                     "' with f >= 3"});
    }
  }
  return issues;
}

DyerGraph DyerGraph::validated(const GraphSpec& spec) {
  auto issues = check(spec);
  if (!issues.empty()) throw validation_error(std::move(issues));

  DyerGraph g;
  for (const auto& v : spec.vertices) g.ids_.push_back(v.id);
  std::sort(g.ids_.begin(), g.ids_.end());
  const int n = g.size();
  g.f_.assign(n, 2);
  for (const auto& v : spec.vertices) g.f_[g.index_of(v.id)] = v.f;
  g.m_ = imatrix_t::Constant(n, n, kInf);
  for (int i = 0; i < n; ++i) g.m_(i, i) = 1;
  for (const auto& e : spec.edges) {
    const int u = g.index_of(e.u), v = g.index_of(e.v);
    g.m_(u, v) = g.m_(v, u) = e.m;
  }
  for (int i = 0; i < n; ++i) {
    if (g.f_[i] == 2)
      g.v2_ = vset_with(g.v2_, i);
    else if (g.f_[i] == kInf)
      g.vinf_ = vset_with(g.vinf_, i);
    else
      g.vp_ = vset_with(g.vp_, i);
  }
  return g;
}

std::optional<int> DyerGraph::find(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int DyerGraph::index_of(const std::string& id) const {
  auto i = find(id);
  if (!i) throw domain_error("unknown vertex '" + id + "'");
  return *i;
}

DyerGraph DyerGraph::induced(vset_t subset) const {
  GraphSpec spec;
  for (int v = 0; v < size(); ++v)
    if (vset_contains(subset, v)) spec.vertices.push_back({ids_[v], f_[v]});
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (vset_contains(subset, u) && vset_contains(subset, v) && adjacent(u, v))
        spec.edges.push_back({ids_[u], ids_[v], m_(u, v)});
  return validated(spec);
}

std::vector<std::string> DyerGraph::subset_ids(vset_t subset) const {
  std::vector<std::string> out;
  for (int v = 0; v < size(); ++v)
    if (vset_contains(subset, v)) out.push_back(ids_[v]);
  return out;
}

vset_t DyerGraph::subset_of(const std::vector<std::string>& ids) const {
  vset_t s = 0;
  for (const auto& id : ids) {
    const int v = index_of(id);
    if (vset_contains(s, v)) throw domain_error("repeated vertex '" + id + "'");
    s = vset_with(s, v);
  }
  return s;
}

GraphSpec DyerGraph::spec() const {
  GraphSpec out;
  for (int v = 0; v < size(); ++v) out.vertices.push_back({ids_[v], f_[v]});
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.edges.push_back({ids_[u], ids_[v], m_(u, v)});
  return out;
}

VertexPartition partition(const DyerGraph& g) { return {g.v2(), g.vp(), g.vinf()}; }

std::string subset_name(const DyerGraph& g, vset_t s) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(s, v)) {
      if (!first) out += ",";
      out += g.id(v);
      first = false;
    }
  return out + "}";
}


GraphSpec parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad graph document: ") + e.what());
  }
  GraphSpec spec;
  try {
    for (const auto& v : doc.at("vertices")) {
      GraphSpec::Vertex vx;
      vx.id = v.at("id").get<std::string>();
      const auto& f = v.at("f");
      if (f.is_string()) {
        if (f.get<std::string>() != "inf") throw parse_error("f must be an integer or \"inf\"");
        vx.f = kInf;
      } else {
        vx.f = f.get<int>();
      }
      spec.vertices.push_back(vx);
    }
    if (doc.contains("edges"))
      for (const auto& e : doc.at("edges"))
        spec.edges.push_back(
            {e.at("u").get<std::string>(), e.at("v").get<std::string>(), e.at("m").get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad graph document: ") + e.what());
  }
  return spec;
}

std::string serialize_graph_json(const DyerGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.size(); ++v) {
    nlohmann::json jv;
    jv["id"] = g.id(v);
    if (g.f(v) == kInf)
      jv["f"] = "inf";
    else
      jv["f"] = g.f(v);
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = nlohmann::json::array();
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v))
        doc["edges"].push_back({{"u", g.id(u)}, {"v", g.id(v)}, {"m", g.m(u, v)}});
  return doc.dump(2) + "\n";
}

}  // namespace dyer
