#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/quantize.hpp"

using namespace orbitkit;

namespace {

RootSystem make(const char* s) { return build_root_system(SeriesSpec::parse(s)); }

const Vec kOmega{Rational(1, 2), Rational(-1, 2)};

}  // namespace

TEST_CASE("integrality examples") {
  const auto a1 = make("A1");
  const auto sc = LatticeSpec::simply_connected();
  const auto adj = LatticeSpec::adjoint();
  const auto custom = LatticeSpec::custom({kOmega}, a1);
  for (const auto& l : {sc, adj, custom}) CHECK(is_integral(zero_vec(2), l, a1));
  CHECK(is_integral(kOmega, sc, a1));
  CHECK_FALSE(is_integral(kOmega, adj, a1));
  CHECK(is_integral(kOmega, custom, a1));
  const Vec half = Rational(1, 2) * kOmega;
  CHECK_FALSE(is_integral(half, sc, a1));
  CHECK_FALSE(is_integral(half, adj, a1));
  CHECK(is_integral(Vec{1, -1}, adj, a1));

  const auto a1t = make("A1xT1");
  CHECK(is_integral(Vec{Rational(1, 2), Rational(-1, 2), 3}, sc, a1t));
  CHECK_FALSE(is_integral(Vec{Rational(1, 2), Rational(-1, 2), Rational(1, 2)}, sc, a1t));
}

TEST_CASE("custom lattices are validated") {
  const auto a1 = make("A1");
  CHECK_THROWS_AS(LatticeSpec::custom({{Rational(1, 4), Rational(-1, 4)}}, a1), InputError);
  CHECK_THROWS_AS(LatticeSpec::custom({{2, -2}}, a1), InputError);
  CHECK_THROWS_AS(LatticeSpec::custom({{1, 0}}, a1), InputError);
  CHECK_THROWS_AS(LatticeSpec::custom({{1, -1, 0}}, a1), DimensionMismatch);
  CHECK(LatticeSpec::custom({{1, -1}}, a1).name() == "custom");
}

TEST_CASE("extendability certificates") {
  const auto a2 = make("A2");
  const auto fw = fundamental_weights(a2);
  CHECK(extendability_certificate(fw[0] + fw[1], a2).records.empty());
  const auto c = extendability_certificate(fw[0], a2);
  CHECK(c.holds);
  CHECK(c.records.size() == 2);
  for (const auto& r : c.records) CHECK(r.value == 0);
  CHECK(extendability_certificate(zero_vec(3), a2).records.size() == 6);
}

TEST_CASE("orbit to representation examples") {
  const auto a1 = make("A1");
  const auto w = generate_weyl_group(a1);
  const auto sc = LatticeSpec::simply_connected();
  const auto v = orbit_to_rep(-kOmega, sc, a1, w);
  CHECK(v.integral);
  CHECK(v.dominant_rep == kOmega);
  CHECK_FALSE(v.is_dominant_input);
  CHECK(v.borel_weil == BorelWeil::nonzero_irreducible);

  const auto third = orbit_to_rep(Rational(1, 3) * kOmega, sc, a1, w);
  CHECK_FALSE(third.integral);
  CHECK(third.borel_weil == BorelWeil::zero_section_space);

  const auto zero = orbit_to_rep(zero_vec(2), sc, a1, w);
  CHECK(zero.integral);
  CHECK(zero.dominant_rep == zero_vec(2));
  CHECK(zero.borel_weil == BorelWeil::nonzero_irreducible);
}

TEST_CASE("integrality is Weyl invariant and verdicts are consistent") {
  std::mt19937_64 rng(17);
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "A1xT1"}) {
    INFO(name);
    const auto rs = make(name);
    const auto w = generate_weyl_group(rs);
    std::vector<LatticeSpec> lattices{LatticeSpec::simply_connected(), LatticeSpec::adjoint()};
    if (std::string(name) == "A3") {
      // Root lattice plus 2 omega_2: the weight lattice of SU(4)/{+-1}.
      const auto fw = fundamental_weights(rs);
      std::vector<Vec> gens;
      for (const auto s : standard_order(rs).simple) gens.push_back(rs.root(s));
      gens.push_back(Rational(2) * fw[1]);
      lattices.push_back(LatticeSpec::custom(gens, rs));
    }
    const bool a_only = rs.spec().torus_rank == 0 && rs.spec().factors[0].series == 'A';
    for (int t = 0; t < 40; ++t) {
      Vec lambda(rs.dim());
      std::uniform_int_distribution<int> half(-4, 4);
      for (auto& q : lambda) q = Rational(half(rng), 2);
      for (auto& q : lambda) q.canonicalize();
      if (a_only) lambda = to_ambient(Weight{lambda, Basis::ambient}, rs).coords;
      for (const auto& lattice : lattices) {
        const bool integral = is_integral(lambda, lattice, rs);
        for (const auto& e : w.elements) CHECK(is_integral(e.matrix * lambda, lattice, rs) == integral);
        const auto v = orbit_to_rep(lambda, lattice, rs, w);
        CHECK(v.integral == integral);
        CHECK((v.borel_weil == BorelWeil::nonzero_irreducible) == v.integral);
        CHECK(is_dominant(v.dominant_rep, w.order));
        const auto orbit = weyl_orbit(lambda, w);
        CHECK(std::binary_search(orbit.points.begin(), orbit.points.end(), v.dominant_rep));
      }
    }
  }
}
