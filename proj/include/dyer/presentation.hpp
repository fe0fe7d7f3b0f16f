#pragma once

#include "dyer/graph.hpp"
#include "dyer/word.hpp"

#include <string>
#include <vector>

namespace dyer {

/// A finite presentation; relator syllables index into `generators`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<SyllableWord> relators;
};

/// Generators x_v with relators x_v^f(v) for finite f and one alternating
/// relator [x_v,x_u]_m [x_u,x_v]_m^-1 per edge.
Presentation dyer_presentation(const DyerGraph& g);

/// Presentation of the Coxeter group of an all-f=2 graph: involutions plus
/// (x_u x_v)^m per edge.
Presentation coxeter_presentation(const DyerGraph& cox);

/// One generator list line, then one relator per line in word syntax.
std::string serialize_presentation(const Presentation& p);

/// Invariant factors (> 1, in divisibility order) and free rank of the
/// abelianized group, via the Smith normal form of the relation matrix.
struct AbelianInvariants {
  std::vector<long long> torsion;
  int rank = 0;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);

}  // namespace dyer
