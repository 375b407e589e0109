#pragma once

#include <string>
#include <vector>

#include "orbitkit/orbit.hpp"
#include "orbitkit/rootsys.hpp"
#include "orbitkit/weyl.hpp"

namespace orbitkit {

enum class LatticeKind { simply_connected, adjoint, custom };

/// Character lattice of the maximal torus, written in ambient coordinates.
///
/// simply_connected: the weight lattice (integral coroot pairings) with integer
///   coordinates on the central torus block.
/// adjoint: the root lattice.
/// custom: integer combinations of the given generator rows.
class LatticeSpec {
 public:
  static LatticeSpec simply_connected();
  static LatticeSpec adjoint();
  /// Validates root lattice <= lattice <= weight lattice against rs and
  /// throws InputError on violation.
  static LatticeSpec custom(std::vector<Vec> generators, const RootSystem& rs);

  LatticeKind kind() const noexcept { return kind_; }
  const std::vector<Vec>& generators() const noexcept { return generators_; }
  std::string name() const;

 private:
  LatticeSpec(LatticeKind kind, std::vector<Vec> gens) : kind_(kind), generators_(std::move(gens)) {}
  LatticeKind kind_;
  std::vector<Vec> generators_;
};

enum class BorelWeil { nonzero_irreducible, zero_section_space };

struct RepVerdict {
  Vec lambda;
  bool integral = false;
  Vec dominant_rep;
  Word word;  // simple reflections (standard order) taking lambda to dominant_rep
  bool is_dominant_input = false;
  BorelWeil borel_weil = BorelWeil::zero_section_space;
};

/// One audited pairing (lambda, beta) for a singular root beta.
struct ExtensionRecord {
  std::size_t root;
  Rational value;
};

struct ExtendabilityCertificate {
  std::vector<ExtensionRecord> records;
  bool holds = false;
};

bool is_integral(const Vec& lambda, const LatticeSpec& lattice, const RootSystem& rs);

/// Records (lambda, beta) = 0 for every singular root beta. Throws
/// TheoremViolation if any recorded value is nonzero.
ExtendabilityCertificate extendability_certificate(const Vec& lambda, const RootSystem& rs);

/// Throws TheoremViolation if integrality differs between lambda and its
/// dominant representative.
RepVerdict orbit_to_rep(const Vec& lambda, const LatticeSpec& lattice, const RootSystem& rs, const WeylGroup& w);

std::string to_string(BorelWeil v);

}  // namespace orbitkit
