#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/rational.hpp"

namespace orbitkit {

/// One simple factor of a compact group: series letter A, B, C or D plus rank.
struct Factor {
  char series = 'A';
  int rank = 1;

  /// Number of ambient Euclidean coordinates the factor occupies.
  std::size_t ambient_dim() const { return series == 'A' ? static_cast<std::size_t>(rank) + 1 : rank; }

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Group type: a product of classical simple factors and a central torus.
///
/// Text form joins factors with 'x', e.g. "A2xB3xT1"; every T-term adds to the
/// torus rank.
struct SeriesSpec {
  std::vector<Factor> factors;
  int torus_rank = 0;

  static SeriesSpec parse(std::string_view text);
  std::string to_string() const;

  /// Throws InputError when a factor has an unknown letter or an invalid rank.
  void validate() const;

  std::size_t ambient_dim() const;
  /// Rank of the maximal torus (semisimple rank plus torus rank).
  std::size_t rank() const;
  std::size_t semisimple_rank() const;
  /// First ambient coordinate of factor i; the torus block starts at offset(factors.size()).
  std::size_t offset(std::size_t factor) const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

enum class Basis { ambient, fundamental };

/// A functional on the Cartan subalgebra. Ambient coordinates are the
/// Euclidean realization used by RootSystem; fundamental coordinates list the
/// coefficients of the fundamental weights followed by the torus coordinates.
struct Weight {
  Vec coords;
  Basis basis = Basis::ambient;
};

/// Exact root data in the standard Euclidean realization:
///   A_n: e_i - e_j in the sum-zero hyperplane of R^{n+1}
///   B_n: +-e_i, +-e_i +- e_j      C_n: +-2e_i, +-e_i +- e_j      D_n: +-e_i +- e_j
/// The pairing is the ambient dot product, so long roots of A/B/D and the
/// short roots of C have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(SeriesSpec spec);

  const SeriesSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return spec_.rank(); }
  /// Real dimension of the compact Lie algebra: rank + |roots|.
  std::size_t algebra_dim() const noexcept { return rank() + roots_.size(); }

  std::span<const Vec> roots() const noexcept { return roots_; }
  const Vec& root(std::size_t i) const { return roots_.at(i); }
  std::size_t size() const noexcept { return roots_.size(); }
  std::optional<std::size_t> find(const Vec& v) const;
  std::size_t negative(std::size_t i) const { return negative_.at(i); }
  /// Index of roots[i] + roots[j] if that sum is a root.
  std::optional<std::size_t> sum(std::size_t i, std::size_t j) const;

  /// Symmetric bilinear form on ambient coordinates.
  Rational pairing(const Vec& a, const Vec& b) const;
  const RationalMatrix& gram() const noexcept { return gram_; }

  /// 2 (v, alpha) / (alpha, alpha)
  Rational coroot_pairing(const Vec& v, std::size_t root) const;

  /// Throws DimensionMismatch unless v has the ambient dimension.
  void require_ambient(const Vec& v) const;

 private:
  SeriesSpec spec_;
  std::size_t dim_ = 0;
  std::vector<Vec> roots_;
  std::map<Vec, std::size_t> index_;
  std::vector<std::size_t> negative_;
  std::vector<std::vector<std::optional<std::size_t>>> sums_;
  RationalMatrix gram_;
};

/// Ambient coordinates after ingestion. `projected` records that an A-factor
/// block violated the sum-zero constraint and was orthogonally projected.
struct AmbientWeight {
  Vec coords;
  bool projected = false;
};

AmbientWeight to_ambient(const Weight& w, const RootSystem& rs);

/// Positive system cut out by a regular vector, with its simple roots.
/// Holds a non-owning pointer: the RootSystem must outlive the order.
struct RootOrder {
  const RootSystem* rs = nullptr;
  Vec seed;
  std::vector<std::size_t> positive;  // ascending root indices
  std::vector<std::size_t> simple;    // sorted by first nonzero coordinate, then lexicographically
  std::vector<bool> is_positive;      // indexed by root

  bool contains(std::size_t root) const { return is_positive.at(root); }
};

RootSystem build_root_system(const SeriesSpec& spec);

Rational pairing(const Vec& xi, const Vec& eta, const RootSystem& rs);

/// Throws InputError naming the wall root if the seed pairs to zero with a root.
RootOrder positive_roots(const RootSystem& rs, const Vec& chamber_seed);

/// Fixed regular seed per factor: A_n uses (n, n-2, ..., -n), B/C/D use (n, n-1, ..., 1).
Vec standard_seed(const RootSystem& rs);
RootOrder standard_order(const RootSystem& rs);

bool is_dominant(const Vec& lambda, const RootOrder& order);

/// Non-negative integer coefficients of a positive root over the simple roots.
std::vector<Integer> simple_coordinates(const Vec& root, const RootOrder& order);

/// Fundamental weights of the standard order, in ambient coordinates, in
/// simple-root order. They lie in the span of the roots.
std::vector<Vec> fundamental_weights(const RootSystem& rs);

/// Cartan integers 2(a_i, a_j)/(a_j, a_j) over the simple roots of the order.
IntMatrix cartan_matrix(const RootOrder& order);

}  // namespace orbitkit
