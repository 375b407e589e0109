#include "orbitkit/linalg.hpp"

#include "orbitkit/error.hpp"

namespace orbitkit {

RationalMatrix from_columns(const std::vector<Vec>& columns, std::size_t dim) {
  RationalMatrix m(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != dim) throw DimensionMismatch("column length does not match matrix height");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix from_rows(const std::vector<Vec>& rows, std::size_t dim) {
  return transpose(from_columns(rows, dim));
}

RationalMatrix rref(RationalMatrix a, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(lead, p);
    const Rational inv = 1 / a(lead, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != lead && a(r, c) != 0) a.add_row(r, lead, Rational(-a(r, c)));
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return a;
}

std::size_t rank(const RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::optional<Vec> solve(const RationalMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match matrix");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  const auto red = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return x;
}

std::vector<Vec> nullspace(const RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  const auto red = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix to_integer(const RationalMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!is_integer(a(r, c))) throw InputError("matrix entry " + to_string(a(r, c)) + " is not an integer");
      m(r, c) = a(r, c).get_num();
    }
  return m;
}

namespace {

// Floor-free quotient toward zero is enough here: the remainder only has to be
// smaller in absolute value than the pivot.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix p = IntMatrix::identity(a.rows());
  IntMatrix q = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    auto place_smallest = [&]() -> bool {
      std::size_t br = m, bc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (br == m || abs(a(i, j)) < abs(a(br, bc)))) {
            br = i;
            bc = j;
          }
      if (br == m) return false;
      a.swap_rows(t, br);
      p.swap_rows(t, br);
      a.swap_cols(t, bc);
      q.swap_cols(t, bc);
      return true;
    };
    if (!place_smallest()) break;

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const Integer f = -tdiv(a(i, t), a(t, t));
        a.add_row(i, t, f);
        p.add_row(i, t, f);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const Integer f = -tdiv(a(t, j), a(t, t));
        a.add_col(j, t, f);
        q.add_col(j, t, f);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        place_smallest();
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      a.add_row(t, bad_row, Integer(1));
      p.add_row(t, bad_row, Integer(1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) p(t, j) = -p(t, j);
    }
  }

  SmithForm out;
  for (std::size_t i = 0; i < m && i < n; ++i)
    if (a(i, i) != 0) out.invariants.push_back(a(i, i));
  out.diagonal = std::move(a);
  out.left = std::move(p);
  out.right = std::move(q);
  return out;
}

std::optional<std::vector<Integer>> integer_combination(const std::vector<Vec>& generators, const Vec& v) {
  const std::size_t dim = v.size();
  Integer scale = 1;
  auto absorb = [&](const Rational& x) { mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t()); };
  for (const auto& g : generators) {
    if (g.size() != dim) throw DimensionMismatch("lattice generator length does not match vector");
    for (const auto& x : g) absorb(x);
  }
  for (const auto& x : v) absorb(x);

  // Columns are the scaled generators: solve A x = target over the integers.
  IntMatrix a(dim, generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) a(r, c) = Rational(generators[c][r] * scale).get_num();
  std::vector<Integer> target(dim);
  for (std::size_t r = 0; r < dim; ++r) target[r] = Rational(v[r] * scale).get_num();

  const auto snf = smith_normal_form(a);
  const auto rhs = snf.left * target;
  std::vector<Integer> y(generators.size(), Integer(0));
  for (std::size_t i = 0; i < dim; ++i) {
    const bool has_pivot = i < snf.rank();
    if (!has_pivot) {
      if (rhs[i] != 0) return std::nullopt;
      continue;
    }
    const Integer& d = snf.invariants[i];
    if (rhs[i] % d != 0) return std::nullopt;
    y[i] = rhs[i] / d;
  }
  return snf.right * y;
}

}  // namespace orbitkit
