#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/oracle.hpp"
#include "orbitkit/orbit.hpp"

using namespace orbitkit;
using namespace orbitkit::oracle;

namespace {

RootSystem a_series(int n) { return build_root_system(SeriesSpec::parse("A" + std::to_string(n - 1))); }

Vec random_sum_zero(std::mt19937_64& rng, int n, int t) {
  if (t % 3 == 0) {
    // Repeated entries put the weight on walls.
    std::uniform_int_distribution<int> small(-1, 1);
    Vec v(n);
    for (auto& q : v) q = small(rng);
    Rational total = 0;
    for (int i = 0; i + 1 < n; ++i) total += v[i];
    v[n - 1] = -total;
    return v;
  }
  return oracles::random_weight(rng, n, true);
}

}  // namespace

TEST_CASE("special unitary bases") {
  CHECK(special_unitary_basis(2).dim() == 3);
  CHECK(special_unitary_basis(2).cartan_indices.size() == 1);
  CHECK(special_unitary_basis(3).dim() == 8);
  CHECK(special_unitary_basis(3).cartan_indices.size() == 2);
  CHECK(special_unitary_basis(4).dim() == 15);
  CHECK(special_unitary_basis(4).cartan_indices.size() == 3);
  CHECK_THROWS_AS(special_unitary_basis(1), InputError);
  CHECK_THROWS_AS(special_unitary_basis(6), InputError);
  for (int n = 2; n <= 5; ++n) {
    const auto alg = special_unitary_basis(n);
    const auto& r = alg.residuals;
    CHECK(std::max({r.anti_hermitian, r.trace, r.closure, r.jacobi}) < kConstructionTol);
    for (std::size_t a = 0; a < alg.dim(); ++a)
      for (std::size_t b = 0; b < alg.dim(); ++b)
        CHECK(std::abs(alg.form(alg.basis[a], alg.basis[b]) - (a == b ? 2.0 : 0.0)) < 1e-14);
    CHECK(form_invariance_residual(alg, 100, 41) < 1e-10);
  }
}

TEST_CASE("numeric root decomposition") {
  const auto su2 = special_unitary_basis(2);
  const auto r2 = numeric_root_decomposition(su2);
  REQUIRE(r2.size() == 2);
  CHECK((r2[0].functional + r2[1].functional).norm() < 1e-12);
  // ad(diag(i, -i)) has eigenvalues +-2i on the off-diagonal directions.
  const CMatrix h = su2.basis[su2.cartan_indices[0]];
  for (const auto& root : r2) {
    const CMatrix lhs = bracket(h, root.vector);
    const std::complex<double> expected(0.0, root.functional[0] - root.functional[1]);
    CHECK(std::abs(std::abs(expected.imag()) - 2.0) < 1e-12);
    CHECK((lhs - expected * root.vector).norm() < 1e-12);
  }
  CHECK(numeric_root_decomposition(special_unitary_basis(4)).size() == 12);
  CHECK(numeric_root_decomposition(special_unitary_basis(5)).size() == 20);

  for (int n = 2; n <= 5; ++n) {
    const auto m = match_roots(numeric_root_decomposition(special_unitary_basis(n)), a_series(n));
    CHECK(m.perfect);
    CHECK(m.max_residual < kMatchTol);
  }
  // A perturbed root set must not match perfectly.
  auto roots = numeric_root_decomposition(special_unitary_basis(3));
  roots[0].functional[0] += 1e-3;
  CHECK_FALSE(match_roots(roots, a_series(3)).perfect);
}

TEST_CASE("root property audit") {
  for (int n = 2; n <= 4; ++n) {
    const auto audit = root_property_audit(special_unitary_basis(n));
    CHECK(audit.passed);
    CHECK(audit.max_residual < kAuditTol);
  }
  const auto alg = special_unitary_basis(3);
  const auto roots = numeric_root_decomposition(alg);
  const auto audit = root_property_audit(alg);
  CHECK(audit.entries.size() == 6 + 36);
  std::size_t sums = 0, cartan = 0, zero = 0;
  for (const auto& e : audit.entries) {
    if (e.kind == "sum") ++sums;
    if (e.kind == "cartan") ++cartan;
    if (e.kind == "zero") ++zero;
    if (e.alpha == e.beta && e.kind != "conjugate") CHECK(e.kind == "zero");
  }
  CHECK(sums == 12);
  CHECK(cartan == 6);
  CHECK(zero == 18);
}

TEST_CASE("KKS blocks against the matrix model") {
  const auto su2 = special_unitary_basis(2);
  const Vec omega{Rational(1, 2), Rational(-1, 2)};
  const auto r = numeric_kks_check(omega, su2, 20, 1);
  CHECK(r.blocks_checked == 1);
  CHECK(r.kks_residual < kKksTol);
  CHECK(r.ok());

  const auto su3 = special_unitary_basis(3);
  const Vec w1{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)};
  const auto r3 = numeric_kks_check(w1, su3, 100, 2);
  CHECK(r3.blocks_checked == 2);
  CHECK(r3.equivariance_residual < kEquivarianceTol);
  CHECK(r3.ok());

  const auto z = numeric_kks_check(zero_vec(3), su3, 50, 3);
  CHECK(z.blocks_checked == 0);
  CHECK(z.kks_residual < 1e-12);
  CHECK(z.equivariance_residual < 1e-12);

  CHECK_THROWS_AS(numeric_kks_check(Vec{1, 0, 0}, su3, 1, 1), InputError);
  CHECK_THROWS_AS(numeric_kks_check(omega, su3, 1, 1), DimensionMismatch);
}

TEST_CASE("frozen KKS convention matches a fresh calibration") {
  CHECK(std::abs(calibrate_kks_constant() - kKksConvention.get_d()) < 1e-12);
}

TEST_CASE("numeric stabilizer rank equals the exact orbit dimension") {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 4; ++n) {
    const auto alg = special_unitary_basis(n);
    const auto rs = a_series(n);
    for (int t = 0; t < 20; ++t) {
      const Vec lambda = random_sum_zero(rng, n, t);
      INFO(to_string(lambda));
      CHECK(numeric_orbit_rank(lambda, alg) == orbit_dimension(lambda, rs));
    }
  }
}
