#include "dyer/embedding.hpp"

#include <map>
#include <set>
#include <sstream>

namespace dyer {

namespace {

std::string primed(const std::string& id) { return id + "'"; }

void check_prime_collisions(const DyerGraph& g, vset_t primed_set) {
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(primed_set, v) && g.find(primed(g.id(v))))
      throw domain_error("primed id '" + primed(g.id(v)) + "' collides with an input vertex");
}

}  // namespace

DyerGraph lambda_graph(const DyerGraph& g) {
  const vset_t flips = g.vp() | g.vinf();
  check_prime_collisions(g, flips);
  GraphSpec spec;
  for (int v = 0; v < g.size(); ++v) spec.vertices.push_back({g.id(v), 2});
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(flips, v)) spec.vertices.push_back({primed(g.id(v)), 2});

  std::map<std::pair<std::string, std::string>, int> edges;
  auto put = [&edges](std::string a, std::string b, int m) {
    if (b < a) std::swap(a, b);
    edges[{a, b}] = m;
  };
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) put(g.id(u), g.id(v), g.m(u, v));
  for (int u = 0; u < g.size(); ++u) {
    if (!vset_contains(flips, u)) continue;
    for (const auto& vx : spec.vertices)
      if (vx.id != g.id(u) && vx.id != primed(g.id(u))) put(primed(g.id(u)), vx.id, 2);
    if (vset_contains(g.vp(), u)) put(g.id(u), primed(g.id(u)), g.f(u));
  }
  for (const auto& [key, m] : edges) spec.edges.push_back({key.first, key.second, m});
  return DyerGraph::validated(spec);
}

DyerGraph omega_graph(const DyerGraph& g) {
  check_prime_collisions(g, g.vinf());
  GraphSpec spec;
  for (int v = 0; v < g.size(); ++v)
    spec.vertices.push_back({g.id(v), vset_contains(g.vp(), v) ? g.f(v) : 2});
  for (int v = 0; v < g.size(); ++v)
    if (vset_contains(g.vinf(), v)) spec.vertices.push_back({primed(g.id(v)), 2});

  std::map<std::pair<std::string, std::string>, int> edges;
  auto put = [&edges](std::string a, std::string b, int m) {
    if (b < a) std::swap(a, b);
    edges[{a, b}] = m;
  };
  auto copy_name = [&](int v) {
    return vset_contains(g.vinf(), v) ? primed(g.id(v)) : g.id(v);
  };
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) continue;
      put(g.id(u), g.id(v), g.m(u, v));              // first copy of Gamma
      put(copy_name(u), copy_name(v), g.m(u, v));    // second copy
      // cross edges between the copies along Vinf
      if (vset_contains(g.vinf(), u)) put(primed(g.id(u)), g.id(v), 2);
      if (vset_contains(g.vinf(), v)) put(g.id(u), primed(g.id(v)), 2);
    }
  for (const auto& [key, m] : edges) spec.edges.push_back({key.first, key.second, m});
  return DyerGraph::validated(spec);
}

Embedding::Embedding(DyerGraph gamma, EmbeddingVariant variant)
    : gamma_(std::move(gamma)),
      variant_(variant),
      lambda_(lambda_graph(gamma_)),
      dside_(variant == EmbeddingVariant::Lambda ? gamma_ : omega_graph(gamma_)) {
  flip_of_gamma_.assign(gamma_.size(), -1);
  for (int v = 0; v < gamma_.size(); ++v)
    if (gamma_.f(v) != 2) {
      flip_of_gamma_[v] = static_cast<int>(flips_.size());
      flips_.push_back(v);
    }

  auto classify = [this](const DyerGraph& h, std::vector<int>& base, std::vector<bool>& prime) {
    base.assign(h.size(), -1);
    prime.assign(h.size(), false);
    for (int v = 0; v < h.size(); ++v) {
      const std::string& id = h.id(v);
      if (auto i = gamma_.find(id)) {
        base[v] = *i;
      } else {
        base[v] = gamma_.index_of(id.substr(0, id.size() - 1));
        prime[v] = true;
      }
    }
  };
  classify(dside_, dside_gamma_, dside_prime_);
  classify(lambda_, lambda_gamma_, lambda_prime_);

  dside_partner_.assign(dside_.size(), -1);
  if (variant_ == EmbeddingVariant::Omega) {
    for (int v = 0; v < dside_.size(); ++v) {
      if (!vset_contains(gamma_.vinf(), dside_gamma_[v])) continue;
      const std::string& gid = gamma_.id(dside_gamma_[v]);
      dside_partner_[v] = dside_.index_of(dside_prime_[v] ? gid : primed(gid));
    }
  }
}

std::string Embedding::flip_name(int b) const {
  return (variant_ == EmbeddingVariant::Lambda ? "xi_" : "kappa_") + gamma_.id(flips_[b]);
}

UWord Embedding::phi(const SyllableWord& w_lambda) const {
  UWord out;
  for (const Syllable& s : normalize(lambda_, w_lambda)) {
    const int gv = lambda_gamma_[s.gen];
    const int flip = flip_of_gamma_[gv];
    if (lambda_prime_[s.gen]) {
      out.push_back({UToken::Kind::Flip, flip, 1});
      continue;
    }
    if (flip < 0) {
      out.push_back({UToken::Kind::Gen, dside_.index_of(gamma_.id(gv)), 1});
      continue;
    }
    const bool flip_first =
        variant_ == EmbeddingVariant::Lambda || vset_contains(gamma_.vp(), gv);
    if (flip_first) out.push_back({UToken::Kind::Flip, flip, 1});
    out.push_back({UToken::Kind::Gen, dside_.index_of(gamma_.id(gv)), 1});
  }
  return out;
}

SyllableWord Embedding::psi(const UWord& w) const {
  SyllableWord out;
  auto emit = [&](const SyllableWord& image, int exp) {
    const SyllableWord block = exp >= 0 ? image : inverse(image);
    for (int i = 0; i < std::abs(exp); ++i)
      out.insert(out.end(), block.begin(), block.end());
  };
  for (const UToken& t : w) {
    if (t.kind == UToken::Kind::Flip) {
      out.push_back({lambda_.index_of(primed(gamma_.id(flips_[t.vertex]))), 1});
      continue;
    }
    const int gv = dside_gamma_[t.vertex];
    const int y = lambda_.index_of(gamma_.id(gv));
    const int yp = flip_of_gamma_[gv] >= 0
                       ? lambda_.index_of(primed(gamma_.id(gv)))
                       : -1;
    SyllableWord image;
    if (variant_ == EmbeddingVariant::Lambda) {
      if (flip_of_gamma_[gv] < 0)
        image = {{y, 1}};
      else
        image = {{yp, 1}, {y, 1}};
    } else {
      if (vset_contains(gamma_.vp(), gv))
        image = {{yp, 1}, {y, 1}};
      else if (dside_prime_[t.vertex])
        image = {{yp, 1}, {y, 1}, {yp, 1}};
      else
        image = {{y, 1}};
    }
    emit(image, t.exp);
  }
  return normalize(lambda_, out);
}

SyllableWord Embedding::flip_action(vset_t eps, const SyllableWord& w) const {
  SyllableWord out;
  for (Syllable s : w) {
    const int gv = dside_gamma_[s.gen];
    const int flip = flip_of_gamma_[gv];
    if (flip >= 0 && vset_contains(eps, flip)) {
      if (dside_partner_[s.gen] >= 0)
        s.gen = dside_partner_[s.gen];  // kappa swaps the primed pair
      else
        s.exp = -s.exp;
    }
    out.push_back(s);
  }
  return normalize(dside_, out);
}

SemidirectElement Embedding::normal_form(const UWord& w, const ReduceBudget& budget) const {
  SemidirectElement nf;
  SyllableWord d;
  for (const UToken& t : w) {
    if (t.kind == UToken::Kind::Flip) {
      if (t.vertex < 0 || t.vertex >= flip_count()) throw domain_error("unknown flip index");
      nf.eps ^= vset_t{1} << t.vertex;
    } else {
      const SyllableWord moved = flip_action(nf.eps, {{t.vertex, t.exp}});
      d.insert(d.end(), moved.begin(), moved.end());
    }
  }
  nf.d = dyer_reduce(dside_, d, budget);
  return nf;
}

Presentation Embedding::u_presentation() const {
  Presentation p;
  for (const auto& id : dside_.ids()) p.generators.push_back(id);
  for (int b = 0; b < flip_count(); ++b) p.generators.push_back(flip_name(b));
  for (const UWord& r : u_relators()) {
    SyllableWord w;
    for (const UToken& t : r)
      w.push_back({t.kind == UToken::Kind::Flip ? dside_.size() + t.vertex : t.vertex,
                   t.kind == UToken::Kind::Flip ? 1 : t.exp});
    p.relators.push_back(std::move(w));
  }
  return p;
}

std::vector<UWord> Embedding::u_relators() const {
  std::vector<UWord> rels;
  auto gen = [](int v, int e) { return UToken{UToken::Kind::Gen, v, e}; };
  auto flip = [](int b) { return UToken{UToken::Kind::Flip, b, 1}; };

  for (int v = 0; v < dside_.size(); ++v)
    if (dside_.f(v) != kInf) rels.push_back({gen(v, dside_.f(v))});
  for (int u = 0; u < dside_.size(); ++u)
    for (int v = u + 1; v < dside_.size(); ++v)
      if (dside_.adjacent(u, v)) {
        UWord r;
        const int m = dside_.m(u, v);
        for (int i = 0; i < m; ++i) r.push_back(gen(i % 2 ? v : u, 1));
        for (int i = m; i-- > 0;) r.push_back(gen(i % 2 ? u : v, -1));
        rels.push_back(std::move(r));
      }
  for (int b = 0; b < flip_count(); ++b) rels.push_back({flip(b), flip(b)});
  for (int b = 0; b < flip_count(); ++b)
    for (int c = b + 1; c < flip_count(); ++c)
      rels.push_back({flip(b), flip(c), flip(b), flip(c)});
  for (int b = 0; b < flip_count(); ++b) {
    const int gb = flips_[b];
    for (int v = 0; v < dside_.size(); ++v) {
      if (dside_gamma_[v] == gb) continue;  // handled by the conjugation relators below
      rels.push_back({flip(b), gen(v, 1), flip(b), gen(v, -1)});
    }
  }
  for (int b = 0; b < flip_count(); ++b) {
    const int gb = flips_[b];
    const int v = dside_.index_of(gamma_.id(gb));
    if (variant_ == EmbeddingVariant::Omega && vset_contains(gamma_.vinf(), gb)) {
      // kappa_u x_u kappa_u = x_u'
      rels.push_back({flip(b), gen(v, 1), flip(b), gen(dside_partner_[v], -1)});
    } else {
      // xi_u x_u xi_u = x_u^-1
      rels.push_back({flip(b), gen(v, 1), flip(b), gen(v, 1)});
    }
  }
  return rels;
}

EmbeddingReport verify_embedding_theorem(const DyerGraph& g, EmbeddingVariant variant,
                                         const ReduceBudget& budget) {
  const Embedding emb(g, variant);
  const DyerGraph& lambda = emb.coxeter();
  const DyerGraph& dside = emb.dyer_side();

  EmbeddingReport report;
  report.variant = variant;
  report.index = 1LL << emb.flip_count();

  auto run = [&](const std::string& name, auto&& body) {
    EmbeddingCheck c;
    c.name = name;
    try {
      auto [ok, detail] = body();
      c.pass = ok;
      c.detail = detail;
    } catch (const search_budget_error& e) {
      c.budget_exceeded = true;
      c.detail = e.what();
      report.budget_exceeded = true;
    }
    report.checks.push_back(std::move(c));
  };

  // (1) relators of W die in U
  const Presentation wpres = coxeter_presentation(lambda);
  for (std::size_t i = 0; i < wpres.relators.size(); ++i) {
    run("W relator " + std::to_string(i), [&]() -> std::pair<bool, std::string> {
      const SemidirectElement nf = emb.normal_form(emb.phi(wpres.relators[i]), budget);
      const bool ok = nf.d.empty() && nf.eps == 0;
      return {ok, ok ? "" : "phi image is nontrivial"};
    });
  }
  // (2) relators of U die in W
  const auto urels = emb.u_relators();
  for (std::size_t i = 0; i < urels.size(); ++i) {
    run("U relator " + std::to_string(i), [&]() -> std::pair<bool, std::string> {
      const bool ok = tits_reduce_coxeter(lambda, emb.psi(urels[i]), budget).empty();
      return {ok, ok ? "" : "psi image is nontrivial"};
    });
  }
  // (3) phi and psi invert each other on generators
  for (int v = 0; v < dside.size(); ++v) {
    run("phi(psi(x_" + dside.id(v) + "))", [&]() -> std::pair<bool, std::string> {
      const SemidirectElement nf =
          emb.normal_form(emb.phi(emb.psi({{UToken::Kind::Gen, v, 1}})), budget);
      const bool ok = nf.eps == 0 && nf.d == dyer_reduce(dside, {{v, 1}}, budget);
      return {ok, ok ? "" : "not the identity map"};
    });
  }
  for (int b = 0; b < emb.flip_count(); ++b) {
    run("phi(psi(" + emb.flip_name(b) + "))", [&]() -> std::pair<bool, std::string> {
      const SemidirectElement nf =
          emb.normal_form(emb.phi(emb.psi({{UToken::Kind::Flip, b, 1}})), budget);
      const bool ok = nf.eps == (vset_t{1} << b) && nf.d.empty();
      return {ok, ok ? "" : "not the identity map"};
    });
  }
  for (int y = 0; y < lambda.size(); ++y) {
    run("psi(phi(y_" + lambda.id(y) + "))", [&]() -> std::pair<bool, std::string> {
      const SyllableWord back = tits_reduce_coxeter(lambda, emb.psi(emb.phi({{y, 1}})), budget);
      const bool ok = back == SyllableWord{{y, 1}};
      return {ok, ok ? "" : "not the identity map"};
    });
  }

  report.pass = !report.budget_exceeded;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

std::string serialize_report(const EmbeddingReport& report) {
  std::ostringstream os;
  os << "variant: " << (report.variant == EmbeddingVariant::Lambda ? "lambda" : "omega") << '\n';
  for (const auto& c : report.checks) {
    os << (c.budget_exceeded ? "BUDGET" : c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << (report.pass ? "PASS" : "FAIL") << " index=" << report.index << '\n';
  return os.str();
}

}  // namespace dyer
