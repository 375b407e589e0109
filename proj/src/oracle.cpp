#include "orbitkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "orbitkit/error.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit::oracle {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RootSystem a_series(int n) { return build_root_system(SeriesSpec::parse("A" + std::to_string(n - 1))); }

CMatrix unit(int n, int r, int c) {
  CMatrix m = CMatrix::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - 1e-9) return true;
    if (a[i] > b[i] + 1e-9) return false;
  }
  return false;
}

std::optional<std::size_t> find_functional(const std::vector<NumericRoot>& roots, const Eigen::VectorXd& f) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if ((roots[i].functional - f).cwiseAbs().maxCoeff() < 1e-6) return i;
  return std::nullopt;
}

// Real matrix of ad(x) in the basis: column b holds the coordinates of [x, T_b].
Eigen::MatrixXd ad_matrix(const MatrixAlgebra& alg, const CMatrix& x) {
  Eigen::MatrixXd r(alg.dim(), alg.dim());
  for (std::size_t b = 0; b < alg.dim(); ++b) r.col(b) = alg.coordinates(bracket(x, alg.basis[b]));
  return r;
}

Eigen::VectorXd random_coords(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

}  // namespace

double MatrixAlgebra::form(const CMatrix& x, const CMatrix& y) const { return -(x * y).trace().real(); }

Eigen::VectorXd MatrixAlgebra::coordinates(const CMatrix& x) const {
  Eigen::VectorXd v(dim());
  for (std::size_t a = 0; a < dim(); ++a) v[a] = form(basis[a], x) / 2.0;
  return v;
}

CMatrix MatrixAlgebra::element(const Eigen::VectorXd& coords) const {
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t a = 0; a < dim(); ++a) m += coords[a] * basis[a];
  return m;
}

CMatrix bracket(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

MatrixAlgebra special_unitary_basis(int n) {
  if (n < 2 || n > 5) throw InputError("matrix model supports su(n) for 2 <= n <= 5, got n = " + std::to_string(n));
  MatrixAlgebra alg;
  alg.n = n;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      alg.basis.push_back(kI * (unit(n, j, k) + unit(n, k, j)));
      alg.basis.push_back(kI * (-kI * unit(n, j, k) + kI * unit(n, k, j)));
    }
  for (int l = 1; l < n; ++l) {
    CMatrix d = CMatrix::Zero(n, n);
    const double s = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) d(j, j) = s;
    d(l, l) = -l * s;
    alg.cartan_indices.push_back(alg.basis.size());
    alg.basis.push_back(kI * d);
  }

  auto& r = alg.residuals;
  for (const auto& t : alg.basis) {
    r.anti_hermitian = std::max(r.anti_hermitian, max_abs(t + t.adjoint()));
    r.trace = std::max(r.trace, std::abs(t.trace()));
  }
  const std::size_t d = alg.dim();
  std::vector<std::vector<CMatrix>> br(d, std::vector<CMatrix>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      br[a][b] = bracket(alg.basis[a], alg.basis[b]);
      r.closure = std::max(r.closure, max_abs(br[a][b] - alg.element(alg.coordinates(br[a][b]))));
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const CMatrix j = bracket(alg.basis[a], br[b][c]) + bracket(alg.basis[b], br[c][a]) +
                          bracket(alg.basis[c], br[a][b]);
        r.jacobi = std::max(r.jacobi, max_abs(j));
      }
  if (std::max({r.anti_hermitian, r.trace, r.closure, r.jacobi}) > kConstructionTol)
    throw TheoremViolation("su(" + std::to_string(n) + ") basis failed its construction checks");
  return alg;
}

std::vector<NumericRoot> numeric_root_decomposition(const MatrixAlgebra& alg) {
  const int n = alg.n;
  const std::size_t d = alg.dim();
  const std::size_t cartan = alg.cartan_indices.size();

  std::vector<Eigen::MatrixXd> ads;
  CMatrix generic = CMatrix::Zero(n, n);
  const double weights[] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0)};
  for (std::size_t c = 0; c < cartan; ++c) {
    const auto& h = alg.basis[alg.cartan_indices[c]];
    ads.push_back(ad_matrix(alg, h));
    generic += weights[c] * h;
  }
  // i ad(H) is Hermitian because ad(H) is real antisymmetric in an orthogonal basis.
  const CMatrix herm = kI * ad_matrix(alg, generic).cast<cd>();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  if (solver.info() != Eigen::Success) throw TheoremViolation("eigendecomposition of ad(H) failed");
  const auto& values = solver.eigenvalues();

  std::size_t zero_count = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) < 1e-6) ++zero_count;
    if (i > 0 && std::abs(values[i]) >= 1e-6 && values[i] - values[i - 1] < 1e-6)
      throw TheoremViolation("ad(H) eigenvalues cluster near " + std::to_string(values[i]));
  }
  if (zero_count != cartan) throw TheoremViolation("zero eigenspace of ad(H) is not the Cartan subalgebra");

  Eigen::MatrixXd system(n, n);
  for (std::size_t c = 0; c < cartan; ++c) {
    const auto& h = alg.basis[alg.cartan_indices[c]];
    for (int j = 0; j < n; ++j) system(c, j) = h(j, j).imag();
  }
  system.row(n - 1).setOnes();
  const auto qr = system.colPivHouseholderQr();

  std::vector<NumericRoot> roots;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) < 1e-6) continue;
    Eigen::VectorXcd v = solver.eigenvectors().col(i);
    v /= v.norm();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (std::size_t c = 0; c < cartan; ++c) {
      const cd q = v.dot(ads[c].cast<cd>() * v);
      rhs[c] = q.imag();
      if ((ads[c].cast<cd>() * v - kI * rhs[c] * v).norm() > kMatchTol)
        throw TheoremViolation("eigenvector of the generic element is not a joint eigenvector");
    }
    NumericRoot root;
    root.functional = qr.solve(rhs);
    CMatrix x = CMatrix::Zero(n, n);
    for (std::size_t b = 0; b < d; ++b) x += v[b] * alg.basis[b];
    x /= x.norm();
    Eigen::Index r = 0, c = 0;
    x.cwiseAbs().maxCoeff(&r, &c);
    x *= std::conj(x(r, c)) / std::abs(x(r, c));
    root.vector = x;
    roots.push_back(std::move(root));
  }
  std::sort(roots.begin(), roots.end(),
            [](const NumericRoot& a, const NumericRoot& b) { return lex_less(a.functional, b.functional); });
  return roots;
}

Eigen::VectorXd to_double(const Vec& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

RootMatching match_roots(const std::vector<NumericRoot>& numeric, const RootSystem& rs, double tol) {
  const std::size_t m = numeric.size();
  std::vector<Eigen::VectorXd> exact;
  for (const auto& r : rs.roots()) exact.push_back(to_double(r));
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < exact.size(); ++j)
      if (exact[j].size() == numeric[i].functional.size() &&
          (exact[j] - numeric[i].functional).cwiseAbs().maxCoeff() < tol)
        adj[i].push_back(j);

  std::vector<std::optional<std::size_t>> exact_to_numeric(exact.size());
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (const auto j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      if (!exact_to_numeric[j] || augment(*exact_to_numeric[j], seen)) {
        exact_to_numeric[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<bool> seen(exact.size(), false);
    augment(i, seen);
  }

  RootMatching out;
  out.numeric_to_exact.assign(m, std::nullopt);
  out.residuals.assign(m, std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < exact.size(); ++j)
    if (exact_to_numeric[j]) {
      const auto i = *exact_to_numeric[j];
      out.numeric_to_exact[i] = j;
      out.residuals[i] = (exact[j] - numeric[i].functional).cwiseAbs().maxCoeff();
    }
  out.perfect = m == exact.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!out.numeric_to_exact[i]) out.perfect = false;
    out.max_residual = std::max(out.max_residual, out.residuals[i]);
  }
  return out;
}

double evaluate(const Eigen::VectorXd& lambda, const CMatrix& x) {
  return (lambda.cast<cd>().asDiagonal() * x).trace().imag();
}

double equivariance_residual(const Eigen::VectorXd& lambda, const CMatrix& x, const CMatrix& y, double step) {
  auto f = [&](double t) {
    const CMatrix g = (t * x).exp();
    const CMatrix g_inv = (-t * x).exp();
    return evaluate(lambda, g * y * g_inv);
  };
  const double fd = (f(step) - f(-step)) / (2 * step);
  return std::abs(fd - evaluate(lambda, bracket(x, y)));
}

namespace {

struct ExactSetup {
  RootSystem rs;
  std::vector<NumericRoot> numeric;
  std::vector<std::size_t> exact_to_numeric;
};

ExactSetup matched_roots(const MatrixAlgebra& alg) {
  ExactSetup s{a_series(alg.n), numeric_root_decomposition(alg), {}};
  const auto match = match_roots(s.numeric, s.rs);
  if (!match.perfect)
    throw TheoremViolation("numeric roots of su(" + std::to_string(alg.n) + ") do not match A" +
                           std::to_string(alg.n - 1));
  s.exact_to_numeric.resize(s.rs.size());
  for (std::size_t i = 0; i < match.numeric_to_exact.size(); ++i) s.exact_to_numeric[*match.numeric_to_exact[i]] = i;
  return s;
}

std::pair<CMatrix, CMatrix> real_pair(const CMatrix& x) { return {x - x.adjoint(), kI * (x + x.adjoint())}; }

void require_model_weight(const Vec& lambda, const MatrixAlgebra& alg) {
  if (lambda.size() != static_cast<std::size_t>(alg.n))
    throw DimensionMismatch("weight has " + std::to_string(lambda.size()) + " coordinates, su(" +
                            std::to_string(alg.n) + ") needs " + std::to_string(alg.n));
  Rational total = 0;
  for (const auto& q : lambda) total += q;
  if (total != 0) throw InputError("weight for su(n) must have coordinates summing to zero");
}

}  // namespace

KksReport numeric_kks_check(const Vec& lambda, const MatrixAlgebra& alg, std::size_t samples, std::uint64_t seed) {
  require_model_weight(lambda, alg);
  const auto setup = matched_roots(alg);
  const auto adm = admissible_positive_system(lambda, setup.rs);
  const auto kks = kks_matrix(lambda, adm.order);
  const Eigen::VectorXd lam = to_double(lambda);

  KksReport rep;
  std::vector<CMatrix> real_basis;
  for (const auto a : kks.basis_labels) {
    const auto [u, v] = real_pair(setup.numeric[setup.exact_to_numeric[a]].vector);
    real_basis.push_back(u);
    real_basis.push_back(v);
  }
  double scale = 0;
  for (const auto& q : kks.entries.data()) scale = std::max(scale, std::abs(q.get_d()));
  if (scale == 0) scale = 1;
  std::vector<double> per_block(kks.basis_labels.size(), 0.0);
  for (std::size_t i = 0; i < real_basis.size(); ++i)
    for (std::size_t j = 0; j < real_basis.size(); ++j) {
      const double numeric = evaluate(lam, bracket(real_basis[i], real_basis[j]));
      const double res = std::abs(numeric - kks.entries(i, j).get_d()) / scale;
      per_block[i / 2] = std::max(per_block[i / 2], res);
      if (res > rep.kks_residual) {
        rep.kks_residual = res;
        rep.worst_root = kks.basis_labels[i / 2];
      }
    }
  rep.blocks_checked = kks.basis_labels.size();
  rep.kks_ok = rep.kks_residual < kKksTol;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    const double res = equivariance_residual(lam, alg.basis[a], alg.basis[b]);
    if (!rep.worst_pair || res > rep.equivariance_residual) {
      rep.equivariance_residual = res;
      rep.worst_pair = std::make_pair(a, b);
    }
  }
  rep.samples = samples;
  rep.equivariance_ok = rep.equivariance_residual < kEquivarianceTol;
  return rep;
}

RootAudit root_property_audit(const MatrixAlgebra& alg, double tol) {
  const auto roots = numeric_root_decomposition(alg);
  RootAudit audit;
  auto record = [&](std::string kind, std::size_t a, std::size_t b, double residual, bool extra = true) {
    const bool passed = residual < tol && extra;
    audit.entries.push_back({std::move(kind), a, b, residual, passed});
    audit.max_residual = std::max(audit.max_residual, residual);
  };
  auto off_span = [](const CMatrix& z, const CMatrix& unit_vec) { return (z - unit_vec * unit_vec.conjugate().cwiseProduct(z).sum()).norm(); };

  for (std::size_t a = 0; a < roots.size(); ++a) {
    const auto neg = find_functional(roots, -roots[a].functional);
    const CMatrix conj = -roots[a].vector.adjoint();
    record("conjugate", a, neg.value_or(a),
           neg ? off_span(conj, roots[*neg].vector) : std::numeric_limits<double>::infinity());
  }
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const CMatrix z = bracket(roots[a].vector, roots[b].vector);
      const Eigen::VectorXd sum = roots[a].functional + roots[b].functional;
      if (sum.cwiseAbs().maxCoeff() < 1e-6) {
        CMatrix off = z;
        off.diagonal().setZero();
        record("cartan", a, b, off.norm() + std::abs(z.trace()));
      } else if (const auto g = find_functional(roots, sum)) {
        record("sum", a, b, off_span(z, roots[*g].vector), z.norm() > tol);
      } else {
        record("zero", a, b, z.norm());
      }
    }
  audit.passed = std::all_of(audit.entries.begin(), audit.entries.end(), [](const AuditEntry& e) { return e.passed; });
  return audit;
}

std::size_t numeric_orbit_rank(const Vec& lambda, const MatrixAlgebra& alg) {
  require_model_weight(lambda, alg);
  const Eigen::VectorXd lam = to_double(lambda);
  Eigen::MatrixXd m(alg.dim(), alg.dim());
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b) m(a, b) = evaluate(lam, bracket(alg.basis[a], alg.basis[b]));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double threshold = 1e-9 * std::max(1.0, sv.size() ? sv[0] : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > threshold) ++rank;
  return rank;
}

double form_invariance_residual(const MatrixAlgebra& alg, std::size_t triples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    const CMatrix x = alg.element(random_coords(alg.dim(), rng));
    const CMatrix y = alg.element(random_coords(alg.dim(), rng));
    const CMatrix z = alg.element(random_coords(alg.dim(), rng));
    worst = std::max(worst, std::abs(alg.form(bracket(x, y), z) + alg.form(y, bracket(x, z))));
  }
  return worst;
}

double calibrate_kks_constant() {
  const auto alg = special_unitary_basis(2);
  const auto setup = matched_roots(alg);
  const Vec omega = fundamental_weights(setup.rs).at(0);
  const auto order = standard_order(setup.rs);
  const auto alpha = order.positive.at(0);
  const auto [a, b] = real_pair(setup.numeric[setup.exact_to_numeric[alpha]].vector);
  const double value = evaluate(to_double(omega), bracket(a, b));
  return value / setup.rs.pairing(omega, setup.rs.root(alpha)).get_d();
}

}  // namespace orbitkit::oracle
