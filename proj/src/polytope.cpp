#include "dyer/polytope.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace dyer {

matrix_t ReflectionRep::matrix_of(const SyllableWord& w) const {
  matrix_t m = matrix_t::Identity(cox.size(), cox.size());
  for (const Syllable& s : w)
    for (int i = 0; i < std::abs(s.exp); ++i) m = m * rho[s.gen];
  return m;
}

ReflectionRep canonical_representation(const DyerGraph& cox) {
  for (int v = 0; v < cox.size(); ++v)
    if (cox.f(v) != 2) throw domain_error("canonical_representation: vertex order is not 2");
  if (!is_spherical(cox, cox.all_vertices()))
    throw domain_error("canonical_representation: group is not finite");
  ReflectionRep rep;
  rep.cox = cox;
  rep.bilinear = bilinear_form(cox);
  for (int s = 0; s < cox.size(); ++s) {
    matrix_t r = matrix_t::Identity(cox.size(), cox.size());
    for (int t = 0; t < cox.size(); ++t) r(s, t) -= 2 * rep.bilinear(s, t);
    rep.rho.push_back(std::move(r));
  }
  return rep;
}

const CoxeterPolytope::Face& CoxeterPolytope::face_of(vset_t t, int elem) const {
  for (const Face& f : faces)
    if (f.t == t && std::binary_search(f.elems.begin(), f.elems.end(), elem)) return f;
  throw domain_error("face_of: no such face");
}

CoxeterPolytope polytope(const DyerGraph& cox, std::size_t max_order) {
  CoxeterPolytope p{canonical_representation(cox),
                    FiniteGroupTable::enumerate(cox, cox.all_vertices(), max_order),
                    {},
                    {},
                    {}};
  const int n = cox.size();
  p.base_point = p.rep.bilinear.ldlt().solve(vector_t::Ones(n));
  p.points.resize(p.table.order());
  for (std::size_t e = 0; e < p.table.order(); ++e)
    p.points[e] = p.rep.matrix_of(p.table.word(static_cast<int>(e))) * p.base_point;

  // faces: left cosets of standard parabolics, for every T
  for (vset_t t = 0;; t = ((t | ~cox.all_vertices()) + 1) & cox.all_vertices()) {
    // subgroup elements of W_T by closure inside the table
    std::vector<int> sub{p.table.identity()};
    std::set<int> seen{p.table.identity()};
    for (std::size_t k = 0; k < sub.size(); ++k)
      for (int v = 0; v < n; ++v) {
        if (!vset_contains(t, v)) continue;
        const int next = p.table.mul_syllable(sub[k], v, 1);
        if (seen.insert(next).second) sub.push_back(next);
      }
    std::vector<char> assigned(p.table.order(), 0);
    for (std::size_t w = 0; w < p.table.order(); ++w) {
      if (assigned[w]) continue;
      CoxeterPolytope::Face f;
      f.t = t;
      for (int u : sub) {
        const int e = p.table.mul(static_cast<int>(w), u);
        f.elems.push_back(e);
        assigned[e] = 1;
      }
      std::sort(f.elems.begin(), f.elems.end());
      f.coset_rep = f.elems.front();
      p.faces.push_back(std::move(f));
    }
    if (t == cox.all_vertices()) break;
  }
  std::sort(p.faces.begin(), p.faces.end(), [](const auto& a, const auto& b) {
    if (vset_size(a.t) != vset_size(b.t)) return vset_size(a.t) < vset_size(b.t);
    if (a.t != b.t) return a.t < b.t;
    return a.coset_rep < b.coset_rep;
  });
  return p;
}

bool face_poset_check(const CoxeterPolytope& p, std::string* witness) {
  auto fail = [&](const std::string& msg) {
    if (witness) *witness = msg;
    return false;
  };
  // orbit points pairwise distinct (x0 has trivial stabilizer)
  for (std::size_t a = 0; a < p.points.size(); ++a)
    for (std::size_t b = a + 1; b < p.points.size(); ++b)
      if ((p.points[a] - p.points[b]).norm() <= kPointTol)
        return fail("coincident orbit points " + std::to_string(a) + ", " + std::to_string(b));

  // geometric point sets per face, matched with tolerance
  auto point_set_contains = [&](const CoxeterPolytope::Face& big,
                                const CoxeterPolytope::Face& small) {
    for (int e : small.elems) {
      bool found = false;
      for (int f : big.elems)
        if ((p.points[e] - p.points[f]).norm() <= kPointTol) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  const DyerGraph& cox = p.rep.cox;
  for (const auto& fa : p.faces)
    for (const auto& fb : p.faces) {
      // coset inclusion: T_a inside T_b and representatives in the same coset
      const bool coset_incl =
          (fa.t & ~fb.t) == 0 &&
          std::binary_search(fb.elems.begin(), fb.elems.end(), fa.coset_rep);
      const bool geom_incl = point_set_contains(fb, fa);
      if (coset_incl != geom_incl)
        return fail("face poset mismatch at " + subset_name(cox, fa.t) + " vs " +
                    subset_name(cox, fb.t));
    }
  return true;
}

TranslationData subpolytope_isometry(const CoxeterPolytope& p, vset_t t) {
  const DyerGraph& cox = p.rep.cox;
  const int n = cox.size();
  std::vector<int> tverts;
  for (int v = 0; v < n; ++v)
    if (vset_contains(t, v)) tverts.push_back(v);
  // base point of the standalone Cox(W_T) inside the T-subspace
  vector_t x0t = vector_t::Zero(n);
  if (!tverts.empty()) {
    matrix_t bt(tverts.size(), tverts.size());
    for (std::size_t i = 0; i < tverts.size(); ++i)
      for (std::size_t j = 0; j < tverts.size(); ++j)
        bt(i, j) = p.rep.bilinear(tverts[i], tverts[j]);
    const vector_t sol = bt.ldlt().solve(vector_t::Ones(tverts.size()));
    for (std::size_t i = 0; i < tverts.size(); ++i) x0t(tverts[i]) = sol(i);
  }
  TranslationData out;
  out.offset = p.base_point - x0t;
  // translation carries rho(w) x0t to rho(w) x0 for every w in W_T
  std::vector<int> sub{p.table.identity()};
  std::set<int> seen{p.table.identity()};
  for (std::size_t k = 0; k < sub.size(); ++k)
    for (int v : tverts) {
      const int next = p.table.mul_syllable(sub[k], v, 1);
      if (seen.insert(next).second) sub.push_back(next);
    }
  for (int w : sub) {
    const matrix_t m = p.rep.matrix_of(p.table.word(w));
    out.max_error = std::max(out.max_error,
                             ((m * x0t + out.offset) - (m * p.base_point)).norm());
  }
  return out;
}

namespace {

/// Euclidean coordinates via the Cholesky factor of B.
std::vector<vector_t> euclidean_points(const CoxeterPolytope& p) {
  const Eigen::LLT<matrix_t> llt(p.rep.bilinear);
  std::vector<vector_t> out;
  out.reserve(p.points.size());
  for (const auto& c : p.points) out.push_back(llt.matrixU() * c);
  return out;
}

/// Cyclic order of a planar face: angle around the centroid inside the plane
/// spanned by the face itself.
std::vector<int> polygon_order(const std::vector<vector_t>& pts, const std::vector<int>& elems) {
  const int k = static_cast<int>(elems.size());
  vector_t centroid = vector_t::Zero(pts[elems[0]].size());
  for (int e : elems) centroid += pts[e];
  centroid /= k;
  // plane basis from the two leading principal directions
  matrix_t d(k, pts[elems[0]].size());
  for (int i = 0; i < k; ++i) d.row(i) = (pts[elems[i]] - centroid).transpose();
  Eigen::JacobiSVD<matrix_t> svd(d, Eigen::ComputeFullV);
  const vector_t u = svd.matrixV().col(0), v = svd.matrixV().col(1);
  std::vector<std::pair<double, int>> ang;
  for (int i = 0; i < k; ++i) {
    const vector_t r = pts[elems[i]] - centroid;
    ang.emplace_back(std::atan2(r.dot(v), r.dot(u)), elems[i]);
  }
  std::sort(ang.begin(), ang.end());
  std::vector<int> order;
  for (auto& [a, e] : ang) order.push_back(e);
  return order;
}

}  // namespace

std::string polytope_obj(const CoxeterPolytope& p) {
  const int n = p.rep.cox.size();
  if (n > 3) throw domain_error("polytope_obj: dimension above 3");
  const auto pts = euclidean_points(p);
  std::ostringstream os;
  os << "# Coxeter polytope, " << p.points.size() << " vertices\n";
  for (const auto& pt : pts) {
    os << "v";
    for (int i = 0; i < 3; ++i) os << ' ' << (i < n ? pt(i) : 0.0);
    os << '\n';
  }
  for (const auto& f : p.faces) {
    if (vset_size(f.t) != 2) continue;
    os << "f";
    for (int e : polygon_order(pts, f.elems)) os << ' ' << (e + 1);
    os << '\n';
  }
  if (n <= 2) {
    // emit edges as lines so 2d polytopes are visible
    for (const auto& f : p.faces) {
      if (vset_size(f.t) != 1) continue;
      os << "l " << (f.elems[0] + 1) << ' ' << (f.elems[1] + 1) << '\n';
    }
  }
  return os.str();
}

std::string face_poset_dump(const CoxeterPolytope& p) {
  const DyerGraph& cox = p.rep.cox;
  std::ostringstream os;
  for (const auto& f : p.faces) {
    os << "face " << subset_name(cox, f.t) << " coset "
       << format_word(cox, p.table.word(f.coset_rep)) << ":";
    for (int e : f.elems) os << ' ' << format_word(cox, p.table.word(e));
    os << '\n';
  }
  return os.str();
}

}  // namespace dyer
