#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/rational.hpp"

namespace orbitkit::cech {

/// Strictly increasing vertex indices.
using Simplex = std::vector<std::size_t>;

/// Nerve of a finite cover as a downward-closed abstract simplicial complex.
/// Every vertex 0..vertex_count-1 is a 0-simplex; simplices of each degree are
/// kept in lexicographic order.
class Nerve {
 public:
  Nerve() = default;
  /// Throws InputError on a tuple that is empty, not strictly increasing, or
  /// has an index >= vertex_count.
  Nerve(std::size_t vertex_count, const std::vector<Simplex>& simplices);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Highest degree with at least one simplex (0 for a nonempty vertex set).
  std::size_t dimension() const noexcept { return by_degree_.empty() ? 0 : by_degree_.size() - 1; }
  const std::vector<Simplex>& simplices(std::size_t degree) const;
  std::size_t count(std::size_t degree) const { return simplices(degree).size(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_degree_;
  std::map<Simplex, std::size_t> index_;
};

/// Builds a nerve from explicit tuples. With vertex_count == 0 the count is
/// inferred as one more than the largest index.
Nerve build_nerve(const std::vector<Simplex>& simplices, std::size_t vertex_count = 0);

/// One simplex per line as whitespace-separated increasing integers; '#'
/// starts a comment. Errors name the offending line.
Nerve read_nerve(std::istream& in);

enum class Ring { integer, rational };

/// Values on the degree-k simplices of a nerve, in the nerve's order.
struct Cochain {
  std::size_t degree = 0;
  Ring ring = Ring::integer;
  Vec values;

  /// Value on an arbitrary ordering of a simplex: the stored value times the
  /// sign of the sorting permutation, zero on repeated vertices. Throws
  /// InputError if the sorted tuple is not a simplex of the nerve.
  Rational evaluate(const Nerve& nerve, const std::vector<std::size_t>& tuple) const;
};

Cochain zero_cochain(const Nerve& nerve, std::size_t degree, Ring ring = Ring::integer);

Cochain operator+(const Cochain& a, const Cochain& b);

/// Lines "<vertex> ... <vertex> <integer>"; the simplex may be listed in any
/// order (the value is stored with the permutation sign). Missing simplices are zero.
Cochain read_cochain(std::istream& in, const Nerve& nerve, std::size_t degree);

/// Alternating coboundary (delta c)_{j0..j(k+1)} = sum_l (-1)^l c_{j0..^jl..j(k+1)}.
Cochain coboundary(const Cochain& c, const Nerve& nerve);

/// Matrix of delta_k: rows are (k+1)-simplices, columns k-simplices.
IntMatrix coboundary_matrix(const Nerve& nerve, std::size_t k);

struct CohomologyGroup {
  std::size_t degree = 0;
  Ring ring = Ring::integer;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, empty over Q

  /// "0", "Z", "Z^2 + Z/2", "Q^3", ...
  std::string to_string() const;
};

CohomologyGroup cohomology(const Nerve& nerve, std::size_t k, Ring ring);

struct TorsionCoordinate {
  Integer residue;
  Integer modulus;
};

struct ChernClass {
  bool valid = false;
  std::optional<Simplex> witness;  // 3-simplex with (delta a) != 0
  /// Coordinates in a fixed basis of the free part of H^2(nerve, Z).
  std::vector<Integer> free;
  std::vector<TorsionCoordinate> torsion;

  bool is_zero() const;
};

/// Class of an integer 2-cocycle in H^2(nerve, Z). Invalid (with a witness)
/// when delta a != 0.
ChernClass chern_class(const Nerve& nerve, const Cochain& a);

}  // namespace orbitkit::cech
