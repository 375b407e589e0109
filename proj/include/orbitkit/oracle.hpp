#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orbitkit/rational.hpp"
#include "orbitkit/rootsys.hpp"

// Floating-point su(n) matrix model used to cross-check the exact modules.
namespace orbitkit::oracle {

using CMatrix = Eigen::MatrixXcd;

inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kMatchTol = 1e-8;
inline constexpr double kEquivarianceTol = 1e-6;
inline constexpr double kEquivarianceStep = 1e-5;
inline constexpr double kAuditTol = 1e-9;
inline constexpr double kKksTol = 1e-9;

struct ConstructionResiduals {
  double anti_hermitian = 0;
  double trace = 0;
  double closure = 0;
  double jacobi = 0;
};

/// Generalized Gell-Mann basis T_a = i * lambda_a of su(n): off-diagonal
/// symmetric/antisymmetric pairs first, then the diagonal (Cartan) elements.
/// The form <X, Y> = -Re tr(XY) gives every basis element squared norm 2.
struct MatrixAlgebra {
  int n = 0;
  std::vector<CMatrix> basis;
  std::vector<std::size_t> cartan_indices;
  ConstructionResiduals residuals;

  std::size_t dim() const { return basis.size(); }
  double form(const CMatrix& x, const CMatrix& y) const;
  /// Real coordinates of an element of su(n) in the basis.
  Eigen::VectorXd coordinates(const CMatrix& x) const;
  CMatrix element(const Eigen::VectorXd& coords) const;
};

CMatrix bracket(const CMatrix& x, const CMatrix& y);

/// Throws InputError unless 2 <= n <= 5 and TheoremViolation if a
/// construction residual exceeds kConstructionTol.
MatrixAlgebra special_unitary_basis(int n);

struct NumericRoot {
  Eigen::VectorXd functional;  // ambient coordinates (length n, sum zero)
  CMatrix vector;              // unit Frobenius norm, largest entry real positive
};

/// Joint eigenvectors of ad(t) on sl(n, C) with nonzero eigenfunctional,
/// sorted by functional. Throws TheoremViolation if the eigenvalues of the
/// generic Cartan element cluster.
std::vector<NumericRoot> numeric_root_decomposition(const MatrixAlgebra& alg);

struct RootMatching {
  bool perfect = false;
  std::vector<std::optional<std::size_t>> numeric_to_exact;
  std::vector<double> residuals;  // per numeric root, sup-norm distance to its partner
  double max_residual = 0;
};

/// Maximum bipartite matching between numeric and exact roots, with an edge
/// wherever the sup-norm distance is below tol.
RootMatching match_roots(const std::vector<NumericRoot>& numeric, const RootSystem& rs, double tol = kMatchTol);

/// lambda(X) = Im tr(diag(lambda) X) for lambda in ambient A_{n-1} coordinates.
double evaluate(const Eigen::VectorXd& lambda, const CMatrix& x);

Eigen::VectorXd to_double(const Vec& v);

/// |central difference of t -> lambda(e^{tX} Y e^{-tX}) at 0 - lambda([X, Y])|.
double equivariance_residual(const Eigen::VectorXd& lambda, const CMatrix& x, const CMatrix& y,
                             double step = kEquivarianceStep);

struct KksReport {
  std::size_t blocks_checked = 0;
  /// max |numeric - exact| over all entries of the KKS matrix, divided by the
  /// largest exact entry (absolute when lambda = 0).
  double kks_residual = 0;
  std::optional<std::size_t> worst_root;
  std::size_t samples = 0;
  double equivariance_residual = 0;
  std::optional<std::pair<std::size_t, std::size_t>> worst_pair;  // basis indices
  bool kks_ok = false;
  bool equivariance_ok = false;

  bool ok() const { return kks_ok && equivariance_ok; }
};

/// Compares exact KKS blocks (admissible chamber of lambda, frozen convention)
/// with lambda([A_a, B_a]) in the matrix model, then checks the moment-map
/// identity on `samples` random basis pairs drawn with `seed`.
KksReport numeric_kks_check(const Vec& lambda, const MatrixAlgebra& alg, std::size_t samples, std::uint64_t seed);

struct AuditEntry {
  std::string kind;  // "conjugate", "sum", "cartan", "zero"
  std::size_t alpha = 0;
  std::size_t beta = 0;
  double residual = 0;
  bool passed = false;
};

struct RootAudit {
  std::vector<AuditEntry> entries;
  double max_residual = 0;
  bool passed = false;
};

RootAudit root_property_audit(const MatrixAlgebra& alg, double tol = kAuditTol);

/// Numeric rank of (X, Y) -> lambda([X, Y]) on the basis.
std::size_t numeric_orbit_rank(const Vec& lambda, const MatrixAlgebra& alg);

/// max |<[X,Y],Z> + <Y,[X,Z]>| over random triples.
double form_invariance_residual(const MatrixAlgebra& alg, std::size_t triples, std::uint64_t seed);

/// Fits the KKS convention constant on su(2) with lambda = omega_1.
double calibrate_kks_constant();

}  // namespace orbitkit::oracle
