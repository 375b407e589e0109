#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/weyl.hpp"

using namespace orbitkit;

namespace {

RootSystem make(const char* s) { return build_root_system(SeriesSpec::parse(s)); }

std::vector<Vec> labels(const RootSet& s, const RootSystem& rs) {
  std::vector<Vec> out;
  for (const auto i : s) out.push_back(rs.root(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Vec sample_weight(std::mt19937_64& rng, const RootSystem& rs, int t) {
  const bool a_only = rs.spec().torus_rank == 0 && rs.spec().factors.size() == 1 && rs.spec().factors[0].series == 'A';
  Vec v;
  if (t % 2 == 0) {
    v = oracles::random_weight(rng, rs.dim(), false);
  } else {
    std::uniform_int_distribution<int> small(-1, 1);
    v.assign(rs.dim(), 0);
    for (auto& q : v) q = small(rng);
  }
  if (a_only) {
    Rational total = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) total += v[i];
    v.back() = -total;
  }
  return to_ambient(Weight{v, Basis::ambient}, rs).coords;
}

const Vec kA1 = {1, -1, 0};
const Vec kA2 = {0, 1, -1};
const Vec kA12 = {1, 0, -1};

}  // namespace

TEST_CASE("singular roots and stabilizer examples") {
  const auto a2 = make("A2");
  const auto fw = fundamental_weights(a2);
  CHECK(singular_roots(zero_vec(3), a2).size() == 6);
  CHECK(labels(singular_roots(fw[0], a2), a2) == sorted({kA2, -kA2}));
  CHECK(singular_roots(fw[0] + fw[1], a2).empty());

  const auto a1 = make("A1");
  const auto s1 = stabilizer_report(Vec{Rational(1, 2), Rational(-1, 2)}, a1);
  CHECK(s1.regular);
  CHECK(s1.dim_g_lambda == 1);
  CHECK(s1.t1_equations.empty());

  const auto s2 = stabilizer_report(fw[0], a2);
  CHECK_FALSE(s2.regular);
  CHECK(s2.dim_g_lambda == 4);
  CHECK(s2.dim_g == 8);
  CHECK(s2.closed);
  CHECK(labels(s2.t1_equations, a2) == std::vector<Vec>{kA2});

  CHECK(stabilizer_report(zero_vec(3), a2).dim_g_lambda == 8);
  CHECK(orbit_dimension(zero_vec(3), a2) == 0);
  CHECK(orbit_dimension(Vec{Rational(1, 2), Rational(-1, 2)}, a1) == 2);
  CHECK(orbit_dimension(fw[0], a2) == 4);
}

TEST_CASE("admissible chamber examples") {
  const auto a2 = make("A2");
  const auto fw = fundamental_weights(a2);
  const auto adm = admissible_positive_system(fw[0], a2);
  CHECK(labels(adm.order.positive, a2) == sorted({kA1, kA2, kA12}));
  CHECK(adm.certificate.ok());
  RootSet pos_sing;
  for (const auto b : singular_roots(fw[0], a2))
    if (adm.order.contains(b)) pos_sing.push_back(b);
  CHECK(labels(pos_sing, a2) == std::vector<Vec>{kA2});

  const auto zero = admissible_positive_system(zero_vec(3), a2);
  CHECK(zero.certificate.ok());
  CHECK(zero.certificate.pairs_checked == 0);

  const auto regular = admissible_positive_system(fw[0] + fw[1], a2);
  CHECK(regular.certificate.ok());
  CHECK(is_dominant(fw[0] + fw[1], regular.order));

  // A weight on the negative side of the standard chamber gets a flipped chamber.
  const Vec neg = -fw[0];
  const auto flipped = admissible_positive_system(neg, a2);
  CHECK(is_dominant(neg, flipped.order));
  CHECK_FALSE(check_admissibility(neg, standard_order(a2)).ok());
}

TEST_CASE("polarization examples") {
  const auto a1 = make("A1");
  const Vec om{Rational(1, 2), Rational(-1, 2)};
  const auto p1 = polarization(om, admissible_positive_system(om, a1).order);
  CHECK(labels(p1.b_roots, a1) == std::vector<Vec>{{1, -1}});

  const auto a2 = make("A2");
  const auto fw = fundamental_weights(a2);
  const Vec rho = fw[0] + fw[1];
  CHECK(polarization(rho, admissible_positive_system(rho, a2).order).b_roots.size() == 3);
  const auto p = polarization(fw[0], admissible_positive_system(fw[0], a2).order);
  CHECK(labels(p.b_roots, a2) == sorted({kA1, kA12}));
  CHECK(p.certificate.ok());

  const auto opposite = positive_roots(a2, Vec{-1, 0, 1});
  CHECK_THROWS_AS(polarization(fw[0], opposite), InputError);
  CHECK_THROWS_AS(kks_matrix(fw[0], opposite), InputError);
}

TEST_CASE("KKS examples and scaling") {
  const auto a2 = make("A2");
  const auto fw = fundamental_weights(a2);
  const auto zero = kks_matrix(zero_vec(3), admissible_positive_system(zero_vec(3), a2).order);
  CHECK(zero.entries.rows() == 0);

  const auto k = kks_matrix(fw[0], admissible_positive_system(fw[0], a2).order);
  CHECK(k.entries.rows() == 4);
  REQUIRE(k.block_values.size() == 2);
  CHECK(k.block_values[0] == k.block_values[1]);
  CHECK(k.block_values[0] == kKksConvention * 1);

  const auto a1 = make("A1");
  const Vec om{Rational(1, 2), Rational(-1, 2)};
  const auto base = kks_matrix(om, admissible_positive_system(om, a1).order);
  for (const Rational t : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
    const Vec scaled = t * om;
    const auto k2 = kks_matrix(scaled, admissible_positive_system(scaled, a1).order);
    CHECK(k2.basis_labels == base.basis_labels);
    CHECK(k2.block_values[0] == t * base.block_values[0]);
  }
}

TEST_CASE("Lagrangian check accepts polarizations and rejects opposite pairs") {
  const auto a2 = make("A2");
  const auto fw = fundamental_weights(a2);
  const auto order = admissible_positive_system(fw[0], a2).order;
  const auto p = polarization(fw[0], order);
  const auto k = kks_matrix(fw[0], order);
  CHECK(lagrangian_check(p, k, fw[0]).ok);

  auto bad = p;
  const auto alpha = p.b_roots[0];
  bad.b_roots.push_back(a2.negative(alpha));
  std::sort(bad.b_roots.begin(), bad.b_roots.end());
  const auto r = lagrangian_check(bad, k, fw[0]);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(a2.root(r.witness->first) == -a2.root(r.witness->second));
  CHECK(!r.reason.empty());
}

TEST_CASE("orbit invariants on random weights") {
  std::mt19937_64 rng(3);
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "A2xT1", "A1xB2"}) {
    INFO(name);
    const auto rs = make(name);
    const auto w = generate_weyl_group(rs);
    for (int t = 0; t < 30; ++t) {
      const Vec lambda = sample_weight(rng, rs, t);
      INFO(to_string(lambda));
      const auto stab = stabilizer_report(lambda, rs);
      const auto dim = orbit_dimension(lambda, rs);
      CHECK(stab.regular == stab.singular.empty());
      CHECK(stab.dim_g_lambda + dim == rs.algebra_dim());
      CHECK(dim % 2 == 0);
      for (const auto b : stab.singular)
        CHECK(std::binary_search(stab.singular.begin(), stab.singular.end(), rs.negative(b)));

      const auto adm = admissible_positive_system(lambda, rs);
      CHECK(adm.certificate.ok());
      const auto pol = polarization(lambda, adm.order);
      CHECK(pol.certificate.ok());
      CHECK(2 * pol.b_roots.size() == rs.size() - stab.singular.size());
      for (const auto a : pol.b_roots)
        CHECK_FALSE(std::binary_search(pol.b_roots.begin(), pol.b_roots.end(), rs.negative(a)));
      const auto k = kks_matrix(lambda, adm.order);
      CHECK(rank(k.entries) == dim);
      for (std::size_t i = 0; i < k.entries.rows(); ++i)
        for (std::size_t j = 0; j < k.entries.cols(); ++j) CHECK(k.entries(i, j) == -k.entries(j, i));
      CHECK(lagrangian_check(pol, k, lambda).ok);

      for (const auto& p : weyl_orbit(lambda, w).points) CHECK(orbit_dimension(p, rs) == dim);
    }
  }
}
