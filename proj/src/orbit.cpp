#include "orbitkit/orbit.hpp"

#include <algorithm>
#include <set>

#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {

bool contains(const RootSet& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

int sign(const Rational& q) { return sgn(q); }

}  // namespace

RootSet singular_roots(const Vec& lambda, const RootSystem& rs) {
  rs.require_ambient(lambda);
  RootSet out;
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs.pairing(lambda, rs.root(i)) == 0) out.push_back(i);
  return out;
}

StabilizerReport stabilizer_report(const Vec& lambda, const RootSystem& rs) {
  StabilizerReport rep;
  rep.lambda = lambda;
  rep.singular = singular_roots(lambda, rs);
  rep.regular = rep.singular.empty();
  rep.dim_g = rs.algebra_dim();
  rep.dim_g_lambda = rs.rank() + rep.singular.size();

  for (const auto a : rep.singular) {
    if (!contains(rep.singular, rs.negative(a)))
      throw TheoremViolation("singular roots of " + to_string(lambda) + " are not closed under negation");
    for (const auto b : rep.singular) {
      const auto s = rs.sum(a, b);
      if (s && !contains(rep.singular, *s))
        throw TheoremViolation("singular roots of " + to_string(lambda) + " are not closed under addition: " +
                               to_string(rs.root(a)) + " + " + to_string(rs.root(b)));
    }
  }
  rep.closed = true;

  const auto std_order = standard_order(rs);
  RootSet pos;
  for (const auto a : rep.singular)
    if (std_order.contains(a)) pos.push_back(a);
  for (const auto a : pos) {
    bool decomposable = false;
    for (const auto b : pos) {
      const auto d = rs.find(rs.root(a) - rs.root(b));
      if (d && contains(pos, *d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rep.t1_equations.push_back(a);
  }
  return rep;
}

std::size_t orbit_dimension(const Vec& lambda, const RootSystem& rs) {
  return rs.size() - singular_roots(lambda, rs).size();
}

AdmissibilityCertificate check_admissibility(const Vec& lambda, const RootOrder& order) {
  const auto& rs = *order.rs;
  AdmissibilityCertificate cert;
  cert.lambda_dominant = is_dominant(lambda, order);
  const RootSet sing = singular_roots(lambda, rs);

  RootSet pos_sing;
  for (const auto b : sing)
    if (order.contains(b)) pos_sing.push_back(b);
  bool cond_i = 2 * pos_sing.size() == sing.size();
  for (const auto b : sing)
    if (order.contains(b) == order.contains(rs.negative(b))) cond_i = false;
  for (const auto a : pos_sing)
    for (const auto b : pos_sing) {
      const auto s = rs.sum(a, b);
      if (s && contains(sing, *s) && !contains(pos_sing, *s)) cond_i = false;
    }
  cert.condition_i = cond_i;

  bool cond_ii = true;
  for (const auto a : order.positive) {
    if (contains(sing, a)) continue;
    for (const auto b : sing) {
      ++cert.pairs_checked;
      const auto s = rs.sum(a, b);
      if (s && (!order.contains(*s) || contains(sing, *s))) cond_ii = false;
    }
  }
  cert.condition_ii = cond_ii;
  return cert;
}

AdmissibleSystem admissible_positive_system(const Vec& lambda, const RootSystem& rs) {
  rs.require_ambient(lambda);
  const Vec direction = standard_seed(rs);
  constexpr std::size_t kMaxSteps = 4096;
  Rational eps = 1;
  for (std::size_t k = 0; k < kMaxSteps; ++k, eps /= 2) {
    const Vec seed = lambda + eps * direction;
    bool good = true;
    for (std::size_t i = 0; i < rs.size() && good; ++i) {
      const int s = sign(rs.pairing(seed, rs.root(i)));
      const int l = sign(rs.pairing(lambda, rs.root(i)));
      if (s == 0 || (l != 0 && s != l)) good = false;
    }
    if (!good) continue;
    AdmissibleSystem out{positive_roots(rs, seed), {}};
    out.certificate = check_admissibility(lambda, out.order);
    out.certificate.perturbation_step = k;
    if (!out.certificate.ok())
      throw TheoremViolation("admissibility certificate failed for " + to_string(lambda));
    return out;
  }
  throw TheoremViolation("no admissible chamber found for " + to_string(lambda));
}

namespace {

void require_admissible(const Vec& lambda, const RootOrder& order, const char* what) {
  order.rs->require_ambient(lambda);
  if (!check_admissibility(lambda, order).ok())
    throw InputError(std::string(what) + ": positive system is not admissible for " + to_string(lambda));
}

}  // namespace

Polarization polarization(const Vec& lambda, const RootOrder& order) {
  require_admissible(lambda, order, "polarization");
  const auto& rs = *order.rs;
  Polarization p;
  p.order = order;
  p.lambda = lambda;
  p.singular = singular_roots(lambda, rs);
  for (const auto a : order.positive)
    if (!contains(p.singular, a)) p.b_roots.push_back(a);

  RootSet b_labels = p.singular;
  b_labels.insert(b_labels.end(), p.b_roots.begin(), p.b_roots.end());
  std::sort(b_labels.begin(), b_labels.end());
  RootSet conj_labels = p.singular;
  for (const auto a : p.b_roots) conj_labels.push_back(rs.negative(a));
  std::sort(conj_labels.begin(), conj_labels.end());

  auto& c = p.certificate;
  c.contains_stabilizer = std::includes(b_labels.begin(), b_labels.end(), p.singular.begin(), p.singular.end());

  RootSet meet;
  std::set_intersection(b_labels.begin(), b_labels.end(), conj_labels.begin(), conj_labels.end(), std::back_inserter(meet));
  c.conjugate_intersection = meet == p.singular;

  c.half_dimension = 2 * p.b_roots.size() == rs.size() - p.singular.size();

  c.subalgebra = true;
  for (const auto a : b_labels)
    for (const auto b : b_labels) {
      const auto s = rs.sum(a, b);
      if (s && !contains(b_labels, *s)) c.subalgebra = false;
    }
  c.stabilizer_invariant = true;
  for (const auto a : p.singular)
    for (const auto b : b_labels) {
      const auto s = rs.sum(a, b);
      if (s && !contains(b_labels, *s)) c.stabilizer_invariant = false;
    }

  if (!c.ok()) throw TheoremViolation("polarization checks failed for " + to_string(lambda));
  return p;
}

KKSMatrix kks_matrix(const Vec& lambda, const RootOrder& order) {
  require_admissible(lambda, order, "kks_matrix");
  const auto& rs = *order.rs;
  KKSMatrix k;
  for (const auto a : order.positive) {
    const Rational pair = rs.pairing(lambda, rs.root(a));
    if (pair == 0) continue;
    k.basis_labels.push_back(a);
    k.block_values.push_back(kKksConvention * pair);
  }
  const std::size_t m = k.basis_labels.size();
  k.entries = RationalMatrix(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (k.block_values[i] == 0) throw TheoremViolation("degenerate KKS block");
    k.entries(2 * i, 2 * i + 1) = k.block_values[i];
    k.entries(2 * i + 1, 2 * i) = -k.block_values[i];
  }
  return k;
}

LagrangianResult lagrangian_check(const Polarization& p, const KKSMatrix& omega, const Vec& lambda) {
  const auto& rs = *p.order.rs;
  LagrangianResult r;
  for (std::size_t i = 0; i < p.b_roots.size(); ++i) {
    const auto a = p.b_roots[i];
    if (rs.pairing(lambda, rs.root(a)) == 0) {
      r.witness = {a, a};
      r.reason = "root " + to_string(rs.root(a)) + " is singular and does not span a tangent direction";
      return r;
    }
    for (std::size_t j = i; j < p.b_roots.size(); ++j) {
      const auto b = p.b_roots[j];
      // [g^a, g^b] lies in t exactly when b = -a; there lambda pairs to
      // (lambda, a) != 0. Otherwise the bracket lies in a root space (or is
      // zero) and lambda, which vanishes off t, annihilates it.
      if (rs.negative(a) == b) {
        r.witness = {a, b};
        r.reason = "opposite pair " + to_string(rs.root(a)) + ", " + to_string(rs.root(b)) +
                   " pairs nontrivially under the KKS form";
        return r;
      }
    }
  }
  const std::size_t omega_rank = rank(omega.entries);
  if (2 * p.b_roots.size() != omega_rank) {
    r.reason = "dim p = " + std::to_string(p.b_roots.size()) + " is not half of rank(omega) = " + std::to_string(omega_rank);
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace orbitkit
