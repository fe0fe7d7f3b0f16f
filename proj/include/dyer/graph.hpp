#pragma once

#include "dyer/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dyer {

/// Raw description of a labeled graph, prior to validation.
struct GraphSpec {
  struct Vertex {
    std::string id;
    int f = 2;  // kInf for infinite order
  };
  struct Edge {
    std::string u, v;
    int m = 2;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct ValidationIssue {
  enum class Kind { NonSimplicial, BadLabelConstraint, MissingLabel, UnknownVertex, TooLarge };
  Kind kind;
  std::string detail;
};

std::string to_string(const ValidationIssue& issue);

struct validation_error : domain_error {
  explicit validation_error(std::vector<ValidationIssue> is);
  std::vector<ValidationIssue> issues;
};

/// A validated Dyer graph. Vertices are indexed 0..n-1 in lexicographic id
/// order; the edge labeling is kept in extended form, with m(v,v) = 1 and
/// m(u,v) = inf for distinct non-adjacent u, v.
class DyerGraph {
 public:
  DyerGraph() = default;  // the empty graph

  static std::vector<ValidationIssue> check(const GraphSpec& spec);
  /// Throws validation_error listing every violated constraint.
  static DyerGraph validated(const GraphSpec& spec);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  /// Index of an id, or nullopt.
  std::optional<int> find(const std::string& id) const;
  /// Index of an id; throws domain_error when missing.
  int index_of(const std::string& id) const;

  int f(int v) const { return f_[v]; }
  bool adjacent(int u, int v) const { return u != v && m_(u, v) != kInf; }
  /// Extended edge labels: m(v,v) = 1, m(u,v) = inf when non-adjacent.
  int m(int u, int v) const { return m_(u, v); }

  vset_t all_vertices() const { return size() == 64 ? ~vset_t{0} : (vset_t{1} << size()) - 1; }
  vset_t v2() const { return v2_; }
  vset_t vp() const { return vp_; }
  vset_t vinf() const { return vinf_; }

  /// Full subgraph spanned by the given vertex subset, with restricted labels.
  DyerGraph induced(vset_t subset) const;

  /// Vertex ids of a subset, in index order.
  std::vector<std::string> subset_ids(vset_t subset) const;
  /// Parses a subset from ids; throws domain_error on unknown vertices.
  vset_t subset_of(const std::vector<std::string>& ids) const;

  GraphSpec spec() const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> f_;
  imatrix_t m_;
  vset_t v2_ = 0, vp_ = 0, vinf_ = 0;
};

/// The V2 / Vp / Vinf split by vertex order.
struct VertexPartition {
  vset_t v2 = 0, vp = 0, vinf = 0;
};

VertexPartition partition(const DyerGraph& g);

/// "{a,b}" rendering of a vertex subset.
std::string subset_name(const DyerGraph& g, vset_t s);

/// JSON document format: {"vertices":[{"id":..,"f":..}],"edges":[{"u":..,"v":..,"m":..}]}
/// with "inf" accepted for f. parse/serialize round-trip to the canonical
/// form (vertices and edges sorted).
GraphSpec parse_graph_json(const std::string& text);
std::string serialize_graph_json(const DyerGraph& g);

}  // namespace dyer
