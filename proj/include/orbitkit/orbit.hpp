#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/rootsys.hpp"

namespace orbitkit {

/// Sorted root indices.
using RootSet = std::vector<std::size_t>;

/// Convention constant for the KKS blocks: the block for a non-singular
/// positive root alpha is kKksConvention * (lambda, alpha). The value was fitted
/// once against the su(2) matrix model with lambda = omega_1 using the real
/// basis A = X - X^dagger, B = i (X + X^dagger) for a unit root vector X, and is
/// frozen here. Reproduce with `orbitkit audit calibrate`.
inline const Rational kKksConvention{2};

struct StabilizerReport {
  Vec lambda;
  RootSet singular;
  bool regular = false;
  std::size_t dim_g_lambda = 0;
  std::size_t dim_g = 0;
  /// Simple roots of the singular subsystem (positive w.r.t. the standard
  /// order); their common kernel is the Lie algebra of the torus T_1.
  RootSet t1_equations;
  bool closed = false;  // singular set closed under root addition (verified)
};

struct AdmissibilityCertificate {
  /// Positive roots inside the singular subsystem form a positive system of it.
  bool condition_i = false;
  /// alpha positive non-singular, beta singular, alpha + beta a root
  ///   => alpha + beta positive non-singular.
  bool condition_ii = false;
  bool lambda_dominant = false;
  std::size_t pairs_checked = 0;
  std::size_t perturbation_step = 0;  // k in seed = lambda + 2^-k * direction

  bool ok() const { return condition_i && condition_ii && lambda_dominant; }
};

struct AdmissibleSystem {
  RootOrder order;
  AdmissibilityCertificate certificate;
};

struct PolarizationCertificate {
  bool contains_stabilizer = false;     // b contains the stabilizer labels
  bool stabilizer_invariant = false;    // [g_lambda, b] stays in b
  bool conjugate_intersection = false;  // b and its conjugate meet exactly in g_lambda
  bool half_dimension = false;          // 2 |b_roots| = |roots| - |singular|
  bool subalgebra = false;              // b_roots + singular closed under root addition

  bool ok() const {
    return contains_stabilizer && stabilizer_invariant && conjugate_intersection && half_dimension && subalgebra;
  }
};

struct Polarization {
  RootOrder order;
  Vec lambda;
  RootSet singular;
  RootSet b_roots;  // positive non-singular roots
  PolarizationCertificate certificate;
};

/// Antisymmetric matrix of the KKS form on the real basis (A_a, B_a), a in
/// basis_labels, with 2x2 blocks [[0, c_a], [-c_a, 0]].
struct KKSMatrix {
  RootSet basis_labels;
  std::vector<Rational> block_values;
  RationalMatrix entries;
};

struct LagrangianResult {
  bool ok = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

RootSet singular_roots(const Vec& lambda, const RootSystem& rs);

/// Throws TheoremViolation if the singular set fails to be closed.
StabilizerReport stabilizer_report(const Vec& lambda, const RootSystem& rs);

std::size_t orbit_dimension(const Vec& lambda, const RootSystem& rs);

/// Chamber whose closure contains lambda, with an exhaustively checked
/// admissibility certificate for the singular subsystem. Throws
/// TheoremViolation if the certificate fails.
AdmissibleSystem admissible_positive_system(const Vec& lambda, const RootSystem& rs);

/// Explicit certificate check for an arbitrary order; used by
/// admissible_positive_system and by callers supplying their own order.
AdmissibilityCertificate check_admissibility(const Vec& lambda, const RootOrder& order);

/// Throws InputError if the order is not admissible for lambda and
/// TheoremViolation if a check on b fails.
Polarization polarization(const Vec& lambda, const RootOrder& order);

/// Throws InputError if the order is not admissible and TheoremViolation on a
/// degenerate block.
KKSMatrix kks_matrix(const Vec& lambda, const RootOrder& order);

LagrangianResult lagrangian_check(const Polarization& p, const KKSMatrix& omega, const Vec& lambda);

}  // namespace orbitkit
