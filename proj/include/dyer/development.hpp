#pragma once

#include "dyer/ball.hpp"
#include "dyer/complex_of_groups.hpp"
#include "dyer/scwol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dyer {

enum class Direction { In, Out };

/// Radius-R truncation of the development C of D(X). Vertices are pairs
/// (coset representative, X); a vertex is interior for a direction when its
/// whole star on that side lies in the ball. Edges carry the scwol edge they
/// sit over.
struct DevelopmentBall {
  DyerGraph graph;
  int radius = 0;
  ComplexOfGroups cx;
  BallEnumeration ball;

  struct Vertex {
    SyllableWord rep;
    int xi = 0;  // index into cx.scwol.verts
    bool interior_in = true, interior_out = true;
  };
  struct Edge {
    int src = 0, tgt = 0;
    int xe = 0;  // index into cx.scwol.edges
  };
  std::vector<Vertex> vertices;  // sorted by (xi, rep)
  std::vector<Edge> edges;

  std::optional<int> find_vertex(vset_t x, const SyllableWord& rep) const;
  std::string vertex_name(int v) const;
  bool interior(int v) const { return vertices[v].interior_in && vertices[v].interior_out; }
};

DevelopmentBall development_ball(const DyerGraph& g, int radius, const ReduceBudget& budget = {});

/// The ball as an explicit scwol with composition.
Scwol development_scwol(const DevelopmentBall& ball);

/// Full subscwol spanned by a vertex and its link on the requested side; the
/// vertex must be interior for that direction.
Scwol star_scwol(const DevelopmentBall& ball, int v, Direction dir);
Scwol link_scwol(const DevelopmentBall& ball, int v, Direction dir);

/// Structured text: one vertex line with the boundary flag, one edge line per
/// development edge.
std::string serialize_development(const DevelopmentBall& ball);

}  // namespace dyer
