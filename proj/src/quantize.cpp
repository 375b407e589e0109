#include "orbitkit/quantize.hpp"

#include "orbitkit/error.hpp"

namespace orbitkit {

LatticeSpec LatticeSpec::simply_connected() { return LatticeSpec(LatticeKind::simply_connected, {}); }

LatticeSpec LatticeSpec::adjoint() { return LatticeSpec(LatticeKind::adjoint, {}); }

LatticeSpec LatticeSpec::custom(std::vector<Vec> generators, const RootSystem& rs) {
  const auto& spec = rs.spec();
  for (const auto& g : generators) {
    rs.require_ambient(g);
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
      if (spec.factors[f].series != 'A') continue;
      Rational total = 0;
      for (std::size_t i = 0; i < spec.factors[f].ambient_dim(); ++i) total += g[spec.offset(f) + i];
      if (total != 0) throw InputError("lattice generator " + to_string(g) + " leaves the sum-zero hyperplane of an A factor");
    }
    for (std::size_t a = 0; a < rs.size(); ++a)
      if (!is_integer(rs.coroot_pairing(g, a)))
        throw InputError("lattice generator " + to_string(g) + " pairs non-integrally with the coroot of " + to_string(rs.root(a)));
  }
  for (const auto& root : rs.roots())
    if (!integer_combination(generators, root))
      throw InputError("custom lattice does not contain the root " + to_string(root));
  return LatticeSpec(LatticeKind::custom, std::move(generators));
}

std::string LatticeSpec::name() const {
  switch (kind_) {
    case LatticeKind::simply_connected:
      return "simply_connected";
    case LatticeKind::adjoint:
      return "adjoint";
    case LatticeKind::custom:
      return "custom";
  }
  return "?";
}

bool is_integral(const Vec& lambda, const LatticeSpec& lattice, const RootSystem& rs) {
  rs.require_ambient(lambda);
  switch (lattice.kind()) {
    case LatticeKind::simply_connected: {
      for (std::size_t a = 0; a < rs.size(); ++a)
        if (!is_integer(rs.coroot_pairing(lambda, a))) return false;
      const auto& spec = rs.spec();
      const std::size_t torus_off = spec.offset(spec.factors.size());
      for (std::size_t t = torus_off; t < rs.dim(); ++t)
        if (!is_integer(lambda[t])) return false;
      return true;
    }
    case LatticeKind::adjoint: {
      const auto order = standard_order(rs);
      std::vector<Vec> simple;
      for (const auto s : order.simple) simple.push_back(rs.root(s));
      return integer_combination(simple, lambda).has_value();
    }
    case LatticeKind::custom:
      return integer_combination(lattice.generators(), lambda).has_value();
  }
  return false;
}

ExtendabilityCertificate extendability_certificate(const Vec& lambda, const RootSystem& rs) {
  ExtendabilityCertificate cert;
  for (const auto b : singular_roots(lambda, rs)) {
    const Rational v = rs.pairing(lambda, rs.root(b));
    if (v != 0) throw TheoremViolation("extendability audit: (lambda, beta) != 0 for singular beta");
    cert.records.push_back({b, v});
  }
  cert.holds = true;
  return cert;
}

RepVerdict orbit_to_rep(const Vec& lambda, const LatticeSpec& lattice, const RootSystem& rs, const WeylGroup& w) {
  RepVerdict v;
  v.lambda = lambda;
  v.is_dominant_input = is_dominant(lambda, w.order);
  auto dom = dominant_representative(lambda, w.order, w);
  v.dominant_rep = std::move(dom.weight);
  v.word = std::move(dom.word);
  v.integral = is_integral(lambda, lattice, rs);
  if (is_integral(v.dominant_rep, lattice, rs) != v.integral)
    throw TheoremViolation("integrality is not Weyl-invariant for " + to_string(lambda));
  v.borel_weil = v.integral ? BorelWeil::nonzero_irreducible : BorelWeil::zero_section_space;
  return v;
}

std::string to_string(BorelWeil v) {
  return v == BorelWeil::nonzero_irreducible ? "nonzero_irreducible" : "zero_section_space";
}

}  // namespace orbitkit
