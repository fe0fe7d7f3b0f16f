// dyercat: constructions around Dyer groups from the command line.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 search
// budget exceeded, 3 I/O or parse error.

#include <CLI11.hpp>

#include "dyer/ball.hpp"
#include "dyer/complex_of_groups.hpp"
#include "dyer/development.hpp"
#include "dyer/embedding.hpp"
#include "dyer/polytope.hpp"
#include "dyer/presentation.hpp"
#include "dyer/sigma.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dyer;

struct RunConfig {
  std::string input;
  int radius = 1;
  double tolerance = kPdPivotTol;
  ReduceBudget budget;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << content;
}

DyerGraph load_graph(const std::string& path) {
  return DyerGraph::validated(parse_graph_json(slurp(path)));
}

int run(int argc, char** argv) {
  CLI::App app{"Dyer group constructions: presentations, Coxeter embeddings, "
               "scwols, developments, and the piecewise-Euclidean complex Sigma"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--budget", cfg.budget.max_closure, "search closure budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-word", cfg.budget.max_word_syllables, "maximum word syllable length")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "positive definiteness pivot threshold")
      ->check(CLI::Range(1e-15, 1e-3));
  if (const char* env = std::getenv("DYERCAT_BUDGET")) {
    const long v = std::atol(env);
    if (v > 0) cfg.budget.max_closure = static_cast<std::size_t>(v);
  }

  std::string word_text, variant = "lambda", obj_path, dot_path;
  bool verify = false, certify = false, want_dot = false;

  auto* validate = app.add_subcommand("validate", "check a Dyer graph document");
  validate->add_option("graph", cfg.input)->required();

  auto* present = app.add_subcommand("present", "print the standard presentation");
  present->add_option("graph", cfg.input)->required();

  auto* embed = app.add_subcommand("embed", "Coxeter embedding graph; --verify checks the theorem");
  embed->add_option("graph", cfg.input)->required();
  embed->add_option("--variant", variant)->check(CLI::IsMember({"lambda", "omega"}));
  embed->add_flag("--verify", verify);

  auto* reduce = app.add_subcommand("reduce", "canonical form of a word");
  reduce->add_option("graph", cfg.input)->required();
  reduce->add_option("word", word_text)->required();

  auto* spherical = app.add_subcommand("spherical", "list the spherical subsets");
  spherical->add_option("graph", cfg.input)->required();

  auto* scwol = app.add_subcommand("scwol", "the scwol X(Gamma); --dot for graphviz");
  scwol->add_option("graph", cfg.input)->required();
  scwol->add_flag("--dot", want_dot);

  auto* develop = app.add_subcommand("develop", "radius-R ball of the development");
  develop->add_option("graph", cfg.input)->required();
  develop->add_option("--radius", cfg.radius)->required()->check(CLI::NonNegativeNumber);

  auto* sigma = app.add_subcommand("sigma", "radius-R ball of the complex Sigma");
  sigma->add_option("graph", cfg.input)->required();
  sigma->add_option("--radius", cfg.radius)->required()->check(CLI::NonNegativeNumber);
  sigma->add_flag("--certify", certify, "run the local CAT(0) certificate");
  sigma->add_option("--obj", obj_path, "write an OBJ model");
  sigma->add_option("--dot", dot_path, "write the labeled 1-skeleton");

  auto* poly = app.add_subcommand("polytope", "Coxeter polytope of an all-f=2 graph");
  poly->add_option("graph", cfg.input)->required();
  poly->add_option("--obj", obj_path, "write an OBJ model");

  auto* dim = app.add_subcommand("dim", "dimension of Sigma and of Sigma(W)");
  dim->add_option("graph", cfg.input)->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    const GraphSpec spec = parse_graph_json(slurp(cfg.input));
    const auto issues = DyerGraph::check(spec);
    if (!issues.empty()) {
      for (const auto& i : issues) std::cout << to_string(i) << '\n';
      return 1;
    }
    std::cout << serialize_graph_json(DyerGraph::validated(spec));
    return 0;
  }
  if (present->parsed()) {
    std::cout << serialize_presentation(dyer_presentation(load_graph(cfg.input)));
    return 0;
  }
  if (embed->parsed()) {
    const DyerGraph g = load_graph(cfg.input);
    const EmbeddingVariant v =
        variant == "lambda" ? EmbeddingVariant::Lambda : EmbeddingVariant::Omega;
    if (!verify) {
      const DyerGraph out = v == EmbeddingVariant::Lambda ? lambda_graph(g) : omega_graph(g);
      std::cout << serialize_graph_json(out);
      return 0;
    }
    const EmbeddingReport report = verify_embedding_theorem(g, v, cfg.budget);
    std::cout << serialize_report(report);
    if (report.budget_exceeded) return 2;
    return report.pass ? 0 : 1;
  }
  if (reduce->parsed()) {
    const DyerGraph g = load_graph(cfg.input);
    std::cout << format_word(g, dyer_reduce(g, parse_word(g, word_text), cfg.budget)) << '\n';
    return 0;
  }
  if (spherical->parsed()) {
    const DyerGraph g = load_graph(cfg.input);
    for (vset_t s : spherical_subsets(g, cfg.tolerance)) std::cout << subset_name(g, s) << '\n';
    return 0;
  }
  if (scwol->parsed()) {
    const DyerGraph g = load_graph(cfg.input);
    const DyerScwol s = dyer_scwol(g);
    if (want_dot) {
      std::cout << scwol_dot(s.to_scwol(g), "dyer_scwol");
      return 0;
    }
    std::ostringstream out;
    out << "vertices: " << s.verts.size() << '\n';
    out << "edges: " << s.edges.size() << '\n';
    for (const XEdge& e : s.edges) out << xedge_name(g, e) << '\n';
    std::cout << out.str();
    return 0;
  }
  if (develop->parsed()) {
    std::cout << serialize_development(development_ball(load_graph(cfg.input), cfg.radius,
                                                        cfg.budget));
    return 0;
  }
  if (sigma->parsed()) {
    const DyerGraph g = load_graph(cfg.input);
    const SigmaBall ball = sigma_ball(g, cfg.radius, cfg.budget);
    std::ostringstream out;
    out << "vertices: " << ball.vertices.size() << '\n';
    out << "edges: " << ball.edges.size() << '\n';
    out << "blocks: " << ball.blocks.size() << '\n';
    int rc = 0;
    if (certify) {
      const Cat0Certificate cert = certify_cat0(g, cfg.radius, cfg.budget, cfg.tolerance);
      out << serialize_certificate(ball, cert);
      rc = cert.pass ? 0 : 1;
    }
    if (!obj_path.empty()) spill(obj_path, sigma_obj(ball));
    if (!dot_path.empty()) spill(dot_path, sigma_dot(ball));
    std::cout << out.str();
    return rc;
  }
  if (poly->parsed()) {
    const DyerGraph g = load_graph(cfg.input);
    const CoxeterPolytope p = polytope(g);
    std::string witness;
    const bool ok = face_poset_check(p, &witness);
    std::ostringstream out;
    out << face_poset_dump(p);
    out << (ok ? "face poset: ok" : "face poset: FAIL (" + witness + ")") << '\n';
    if (!obj_path.empty()) spill(obj_path, polytope_obj(p));
    std::cout << out.str();
    return ok ? 0 : 1;
  }
  if (dim->parsed()) {
    const auto [ds, dw] = dimension_stats(load_graph(cfg.input));
    std::cout << "dim Sigma = " << ds << '\n';
    std::cout << "dim Sigma(W) = " << dw << '\n';
    return 0;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dyer::search_budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const dyer::order_budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const dyer::validation_error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const dyer::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
