#pragma once

#include "dyer/graph.hpp"
#include "dyer/presentation.hpp"
#include "dyer/rewrite.hpp"
#include "dyer/word.hpp"

#include <string>
#include <vector>

namespace dyer {

enum class EmbeddingVariant { Lambda, Omega };

/// Letters of the semidirect product U: either a generator syllable x_v^e of
/// the Dyer side or one of the commuting involutions (xi for the Lambda
/// variant, kappa for the Omega variant).
struct UToken {
  enum class Kind { Gen, Flip };
  Kind kind = Kind::Gen;
  int vertex = 0;  // dyer-side vertex for Gen, flip index for Flip
  int exp = 1;
};
using UWord = std::vector<UToken>;

/// An element of U in normal form d * prod_{b in eps} flip_b.
struct SemidirectElement {
  SyllableWord d;
  vset_t eps = 0;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// The Coxeter embedding data built from a Dyer graph: the Coxeter graph
/// Lambda, the Dyer-side graph (Gamma itself or Omega), and the bookkeeping
/// identifying primed vertices. Flips are indexed by Vp u Vinf of Gamma in
/// vertex order.
class Embedding {
 public:
  Embedding(DyerGraph gamma, EmbeddingVariant variant);

  const DyerGraph& gamma() const { return gamma_; }
  const DyerGraph& coxeter() const { return lambda_; }
  const DyerGraph& dyer_side() const { return dside_; }
  EmbeddingVariant variant() const { return variant_; }

  int flip_count() const { return static_cast<int>(flips_.size()); }
  /// Gamma vertex of a flip index.
  int flip_gamma_vertex(int b) const { return flips_[b]; }
  std::string flip_name(int b) const;

  /// Letterwise image of a word over Lambda under phi: W -> U.
  UWord phi(const SyllableWord& w_lambda) const;
  /// Letterwise image of a U word under psi: U -> W.
  SyllableWord psi(const UWord& w) const;

  /// Applies the product of flip involutions named by eps to a Dyer-side word
  /// and normalizes: xi negates the chosen exponents, kappa additionally
  /// swaps primed pairs of Omega.
  SyllableWord flip_action(vset_t eps, const SyllableWord& w) const;

  /// Pushes flip letters to the right, reduces the Dyer part.
  SemidirectElement normal_form(const UWord& w, const ReduceBudget& budget = {}) const;

  /// Presentation of U (generators x_v then flips).
  Presentation u_presentation() const;
  /// The relators of U as UWords, in u_presentation order.
  std::vector<UWord> u_relators() const;

 private:
  DyerGraph gamma_;
  EmbeddingVariant variant_;
  DyerGraph lambda_;
  DyerGraph dside_;
  std::vector<int> flips_;          // gamma vertices with f >= 3, in order
  std::vector<int> flip_of_gamma_;  // gamma vertex -> flip index or -1
  // per dyer-side vertex: originating gamma vertex and primed flag
  std::vector<int> dside_gamma_;
  std::vector<bool> dside_prime_;
  std::vector<int> dside_partner_;  // primed partner in Omega, -1 otherwise
  // per lambda vertex: originating gamma vertex and primed flag
  std::vector<int> lambda_gamma_;
  std::vector<bool> lambda_prime_;
};

DyerGraph lambda_graph(const DyerGraph& g);
DyerGraph omega_graph(const DyerGraph& g);

struct EmbeddingCheck {
  std::string name;
  bool pass = false;
  bool budget_exceeded = false;
  std::string detail;
};

struct EmbeddingReport {
  EmbeddingVariant variant;
  std::vector<EmbeddingCheck> checks;
  long long index = 0;
  bool pass = false;
  bool budget_exceeded = false;
};

/// Mechanical verification: relators of W map to trivial elements of U,
/// relators of U map to trivial elements of W, phi and psi invert each other
/// on generators, and the complement has size 2^|Vp u Vinf|.
EmbeddingReport verify_embedding_theorem(const DyerGraph& g, EmbeddingVariant variant,
                                         const ReduceBudget& budget = {});

std::string serialize_report(const EmbeddingReport& report);

}  // namespace dyer
