#include "orbitkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orbitkit/error.hpp"

namespace orbitkit {

SeriesSpec SeriesSpec::parse(std::string_view text) {
  SeriesSpec spec;
  if (text.empty()) throw InputError("empty series specification");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto cut = text.find('x', start);
    const auto term = text.substr(start, cut == std::string_view::npos ? std::string_view::npos : cut - start);
    if (term.size() < 2 || !std::isupper(static_cast<unsigned char>(term[0])))
      throw InputError("malformed series factor '" + std::string(term) + "' in '" + std::string(text) + "'");
    const auto digits = term.substr(1);
    if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InputError("malformed rank in series factor '" + std::string(term) + "'");
    const int rank = std::stoi(std::string(digits));
    if (term[0] == 'T') {
      if (rank < 1) throw InputError("torus factor needs rank >= 1");
      spec.torus_rank += rank;
    } else {
      spec.factors.push_back({term[0], rank});
    }
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  spec.validate();
  return spec;
}

void SeriesSpec::validate() const {
  if (torus_rank < 0) throw InputError("negative torus rank");
  for (const auto& f : factors) {
    switch (f.series) {
      case 'A':
      case 'B':
      case 'C':
        if (f.rank < 1) throw InputError(std::string("series ") + f.series + " needs rank >= 1");
        break;
      case 'D':
        if (f.rank < 2) throw InputError("series D needs rank >= 2");
        break;
      default:
        throw InputError(std::string("unknown series letter '") + f.series + "' (expected A, B, C, D or T)");
    }
  }
}

std::string SeriesSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    os << (first ? "" : "x") << f.series << f.rank;
    first = false;
  }
  if (torus_rank > 0) os << (first ? "" : "x") << 'T' << torus_rank;
  return os.str();
}

std::size_t SeriesSpec::ambient_dim() const { return offset(factors.size()) + static_cast<std::size_t>(torus_rank); }

std::size_t SeriesSpec::semisimple_rank() const {
  std::size_t r = 0;
  for (const auto& f : factors) r += static_cast<std::size_t>(f.rank);
  return r;
}

std::size_t SeriesSpec::rank() const { return semisimple_rank() + static_cast<std::size_t>(torus_rank); }

std::size_t SeriesSpec::offset(std::size_t factor) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < factor && i < factors.size(); ++i) off += factors[i].ambient_dim();
  return off;
}

namespace {

void append_factor_roots(const Factor& f, std::size_t off, std::size_t dim, std::vector<Vec>& out) {
  const std::size_t m = f.ambient_dim();
  auto e = [&](std::size_t i) { return unit_vec(dim, off + i); };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      out.push_back(e(i) - e(j));
      if (f.series != 'A' && i < j) {
        out.push_back(e(i) + e(j));
        out.push_back(-(e(i) + e(j)));
      }
    }
    if (f.series == 'B') {
      out.push_back(e(i));
      out.push_back(-e(i));
    } else if (f.series == 'C') {
      out.push_back(Rational(2) * e(i));
      out.push_back(Rational(-2) * e(i));
    }
  }
}

}  // namespace

RootSystem::RootSystem(SeriesSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  dim_ = spec_.ambient_dim();
  std::vector<Vec> raw;
  for (std::size_t i = 0; i < spec_.factors.size(); ++i) append_factor_roots(spec_.factors[i], spec_.offset(i), dim_, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  roots_ = std::move(raw);
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);

  negative_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) negative_[i] = index_.at(-roots_[i]);

  sums_.assign(roots_.size(), std::vector<std::optional<std::size_t>>(roots_.size()));
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = 0; j < roots_.size(); ++j) sums_[i][j] = find(roots_[i] + roots_[j]);

  gram_ = RationalMatrix::identity(dim_);
}

std::optional<std::size_t> RootSystem::find(const Vec& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::sum(std::size_t i, std::size_t j) const { return sums_.at(i).at(j); }

void RootSystem::require_ambient(const Vec& v) const {
  if (v.size() != dim_)
    throw DimensionMismatch("expected " + std::to_string(dim_) + " ambient coordinates for " + spec_.to_string() +
                            ", got " + std::to_string(v.size()));
}

Rational RootSystem::pairing(const Vec& a, const Vec& b) const {
  require_ambient(a);
  require_ambient(b);
  return dot(a, gram_ * b);
}

Rational RootSystem::coroot_pairing(const Vec& v, std::size_t root) const {
  const Vec& a = roots_.at(root);
  return 2 * pairing(v, a) / pairing(a, a);
}

RootSystem build_root_system(const SeriesSpec& spec) { return RootSystem(spec); }

Rational pairing(const Vec& xi, const Vec& eta, const RootSystem& rs) { return rs.pairing(xi, eta); }

AmbientWeight to_ambient(const Weight& w, const RootSystem& rs) {
  const auto& spec = rs.spec();
  AmbientWeight out;
  if (w.basis == Basis::fundamental) {
    const std::size_t ss = spec.semisimple_rank();
    if (w.coords.size() != spec.rank())
      throw DimensionMismatch("expected " + std::to_string(spec.rank()) + " fundamental coordinates for " +
                              spec.to_string() + ", got " + std::to_string(w.coords.size()));
    out.coords = zero_vec(rs.dim());
    const auto omegas = fundamental_weights(rs);
    for (std::size_t i = 0; i < ss; ++i) out.coords = out.coords + w.coords[i] * omegas[i];
    const std::size_t torus_off = spec.offset(spec.factors.size());
    for (std::size_t t = 0; t < static_cast<std::size_t>(spec.torus_rank); ++t) out.coords[torus_off + t] = w.coords[ss + t];
    return out;
  }
  rs.require_ambient(w.coords);
  out.coords = w.coords;
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    if (spec.factors[f].series != 'A') continue;
    const std::size_t off = spec.offset(f);
    const std::size_t m = spec.factors[f].ambient_dim();
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) total += out.coords[off + i];
    if (total == 0) continue;
    const Rational mean = total / static_cast<long>(m);
    for (std::size_t i = 0; i < m; ++i) out.coords[off + i] -= mean;
    out.projected = true;
  }
  return out;
}

namespace {

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

RootOrder positive_roots(const RootSystem& rs, const Vec& chamber_seed) {
  rs.require_ambient(chamber_seed);
  RootOrder order;
  order.rs = &rs;
  order.seed = chamber_seed;
  order.is_positive.assign(rs.size(), false);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Rational s = rs.pairing(chamber_seed, rs.root(i));
    if (s == 0)
      throw InputError("chamber seed " + to_string(chamber_seed) + " lies on the wall of root " + to_string(rs.root(i)));
    if (s > 0) {
      order.positive.push_back(i);
      order.is_positive[i] = true;
    }
  }
  for (const auto a : order.positive) {
    bool decomposable = false;
    for (const auto b : order.positive) {
      const auto diff = rs.find(rs.root(a) - rs.root(b));
      if (diff && order.is_positive[*diff]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) order.simple.push_back(a);
  }
  std::sort(order.simple.begin(), order.simple.end(), [&](std::size_t x, std::size_t y) {
    const auto fx = first_nonzero(rs.root(x));
    const auto fy = first_nonzero(rs.root(y));
    if (fx != fy) return fx < fy;
    return rs.root(x) < rs.root(y);
  });
  return order;
}

Vec standard_seed(const RootSystem& rs) {
  const auto& spec = rs.spec();
  Vec seed = zero_vec(rs.dim());
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    const auto& fac = spec.factors[f];
    const std::size_t off = spec.offset(f);
    const long n = fac.rank;
    for (long i = 0; i < static_cast<long>(fac.ambient_dim()); ++i)
      seed[off + static_cast<std::size_t>(i)] = fac.series == 'A' ? Rational(n - 2 * i) : Rational(n - i);
  }
  return seed;
}

RootOrder standard_order(const RootSystem& rs) { return positive_roots(rs, standard_seed(rs)); }

bool is_dominant(const Vec& lambda, const RootOrder& order) {
  for (const auto a : order.simple)
    if (order.rs->pairing(lambda, order.rs->root(a)) < 0) return false;
  return true;
}

std::vector<Integer> simple_coordinates(const Vec& root, const RootOrder& order) {
  const auto& rs = *order.rs;
  std::vector<Vec> cols;
  for (const auto s : order.simple) cols.push_back(rs.root(s));
  const auto x = solve(from_columns(cols, rs.dim()), root);
  if (!x) throw InputError("vector " + to_string(root) + " is not in the span of the simple roots");
  std::vector<Integer> out;
  for (const auto& c : *x) {
    if (!is_integer(c)) throw TheoremViolation("root " + to_string(root) + " has a non-integral simple-root coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

IntMatrix cartan_matrix(const RootOrder& order) {
  const auto& rs = *order.rs;
  const std::size_t r = order.simple.size();
  IntMatrix a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational c = rs.coroot_pairing(rs.root(order.simple[i]), order.simple[j]);
      if (!is_integer(c)) throw TheoremViolation("non-integral Cartan number");
      a(i, j) = c.get_num();
    }
  return a;
}

std::vector<Vec> fundamental_weights(const RootSystem& rs) {
  const auto order = standard_order(rs);
  const std::size_t r = order.simple.size();
  // omega_i = sum_k c_k alpha_k with 2(omega_i, alpha_j)/(alpha_j, alpha_j) = delta_ij.
  RationalMatrix system(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) system(j, k) = rs.coroot_pairing(rs.root(order.simple[k]), order.simple[j]);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r; ++i) {
    const auto c = solve(system, unit_vec(r, i));
    if (!c) throw TheoremViolation("Cartan matrix is singular");
    Vec w = zero_vec(rs.dim());
    for (std::size_t k = 0; k < r; ++k) w = w + (*c)[k] * rs.root(order.simple[k]);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace orbitkit
