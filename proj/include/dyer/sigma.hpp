#pragma once

#include "dyer/development.hpp"
#include "dyer/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dyer {

/// Template of the cell complex attached to a spherical subset Y: the product
/// of the Coxeter polytope of Y2, the unit cube over Yinf, and one f(v)-branch
/// star per v in Yp. Vertices are triples; star coordinates store -1 at the
/// center and an exponent 0..f(v)-1 at a tip.
struct ElementaryBlock {
  vset_t y = 0;
  FiniteGroupTable cox;            // multiplication table of D_{Y2}
  std::vector<int> yinf, yp;       // vertex lists in index order

  struct Vertex {
    int w = 0;                     // element of D_{Y2}
    vset_t lambda = 0;             // subset of yinf (by graph vertex bits)
    std::vector<int> star;         // per yp entry: -1 center, else exponent
  };
  std::vector<Vertex> vertices;
  struct Edge {
    int a = 0, b = 0;              // vertex indices
    int label = 0;                 // graph vertex
  };
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
};

ElementaryBlock elementary_block(const DyerGraph& g, vset_t y, std::size_t max_order = 10'000);

/// Intrinsic distance of two block vertices in the product metric: chordal in
/// the polytope factor, Euclidean on the cube, geodesic through star centers.
scalar_t block_distance(const ElementaryBlock& block, const CoxeterPolytope& cox_polytope,
                        int va, int vb);

/// The finite part of Sigma carried by a development ball: blocks over every
/// ball vertex, glued along shared (coset, X <= Vp) vertices, with the edge
/// labeling by V(Gamma).
struct SigmaBall {
  DyerGraph graph;
  int radius = 0;
  DevelopmentBall dev;

  struct Vertex {
    SyllableWord rep;
    vset_t x = 0;        // subset of Vp
    bool interior = true;
  };
  std::vector<Vertex> vertices;
  struct Edge {
    int a = 0, b = 0;    // sorted sigma vertex indices
    int label = 0;       // graph vertex
  };
  std::vector<Edge> edges;

  struct Block {
    int dev_vertex = 0;          // index into dev.vertices
    int tmpl = 0;                // index into templates
    std::vector<int> image;      // sigma vertex per template vertex
  };
  std::vector<Block> blocks;
  std::vector<ElementaryBlock> templates;  // one per distinct Y among blocks
  std::vector<vset_t> template_y;

  std::optional<int> find_vertex(vset_t x, const SyllableWord& rep) const;
  std::optional<int> find_edge(int a, int b) const;
  std::string vertex_name(int v) const;
  int edge_label(int e) const { return edges[e].label; }
};

SigmaBall sigma_ball(const DyerGraph& g, int radius, const ReduceBudget& budget = {});

/// The image of the block bijection j_base on Sigma(base Y): one (coset rep,
/// Z) per template vertex. Throws when the map fails to be injective.
std::vector<std::pair<SyllableWord, vset_t>> vertex_bijection(const DyerGraph& g,
                                                              const ElementaryBlock& block,
                                                              const SyllableWord& base,
                                                              const ComplexOfGroups& cx,
                                                              const ReduceBudget& budget = {});

/// Piecewise-spherical link data at a vertex. Link vertices are incident
/// Sigma edges; chambers are the per-block link vertex sets. A set spans a
/// simplex iff it sits inside one chamber with pairwise distinct labels.
struct LinkComplex {
  std::vector<int> labels;                       // per link vertex, graph vertex (or synthetic id)
  std::vector<std::string> names;                // for reporting
  std::vector<std::vector<int>> chambers;        // link vertex index sets
  std::map<std::pair<int, int>, scalar_t> edge_length;  // on adjacent pairs, sorted keys

  bool adjacent(int u, int v) const;
  bool spans(const std::vector<int>& clique) const;
};

/// Link of an interior vertex, lengths pi - pi/m(label, label).
LinkComplex vertex_link(const SigmaBall& ball, int sigma_vertex);

struct MetricFlagResult {
  bool pass = true;
  bool all_edges_at_least_right = true;
  std::string witness;
};

/// Moussong's criterion at one vertex: every edge at least pi/2, and every
/// clique spans a simplex exactly when its cosine matrix is positive
/// definite.
MetricFlagResult check_metric_flag(const LinkComplex& lk,
                                   scalar_t pivot_tol = kPdPivotTol);

struct Cat0Certificate {
  int radius = 0;
  struct Entry {
    int vertex = 0;
    bool edge_lengths_ok = true;
    bool metric_flag_ok = true;
    std::string witness;
  };
  std::vector<Entry> entries;  // one per interior vertex
  int boundary_skipped = 0;
  bool pass = false;
};

/// Runs the link checks at every interior vertex of the radius-R ball; simple
/// connectedness holds by construction and is not re-verified.
Cat0Certificate certify_cat0(const DyerGraph& g, int radius,
                             const ReduceBudget& budget = {},
                             scalar_t pivot_tol = kPdPivotTol);

std::string serialize_certificate(const SigmaBall& ball, const Cat0Certificate& cert);

/// (dim Sigma, dim Sigma(W)) from the spherical subsets of Gamma.
std::pair<int, int> dimension_stats(const DyerGraph& g);

/// DOT of the labeled 1-skeleton.
std::string sigma_dot(const SigmaBall& ball);

/// Wavefront OBJ with a spanning-tree layout of block translations; requires
/// every block to fit in 3 presentation coordinates.
std::string sigma_obj(const SigmaBall& ball);

}  // namespace dyer
