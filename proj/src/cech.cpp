#include "orbitkit/cech.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "orbitkit/error.hpp"

namespace orbitkit::cech {

namespace {

const std::vector<Simplex> kNoSimplices;

void check_tuple(const Simplex& s, std::size_t vertex_count) {
  if (s.empty()) throw InputError("empty simplex");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= vertex_count)
      throw InputError("vertex " + std::to_string(s[i]) + " out of range (vertex count " + std::to_string(vertex_count) + ")");
    if (i > 0 && s[i] <= s[i - 1]) throw InputError("simplex vertices must be strictly increasing");
  }
}

// Sign of the permutation sorting `tuple`, or 0 if it has a repeated entry.
int sort_with_sign(std::vector<std::size_t>& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  return sign;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<long long> parse_integers(const std::string& text, std::size_t line_no) {
  std::istringstream is(text);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

Simplex to_vertices(const std::vector<long long>& raw, std::size_t line_no) {
  Simplex s;
  for (const auto v : raw) {
    if (v < 0) throw InputError("line " + std::to_string(line_no) + ": negative vertex index");
    s.push_back(static_cast<std::size_t>(v));
  }
  return s;
}

}  // namespace

Nerve::Nerve(std::size_t vertex_count, const std::vector<Simplex>& simplices) : vertex_count_(vertex_count) {
  std::vector<std::set<Simplex>> faces;
  auto insert = [&](const Simplex& s) {
    if (faces.size() < s.size()) faces.resize(s.size());
    faces[s.size() - 1].insert(s);
  };
  for (std::size_t v = 0; v < vertex_count; ++v) insert({v});
  for (const auto& s : simplices) {
    check_tuple(s, vertex_count);
    if (s.size() > 20) throw InputError("simplex dimension above 19 is not supported");
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
      insert(face);
    }
  }
  for (auto& level : faces) {
    by_degree_.emplace_back(level.begin(), level.end());
    for (std::size_t i = 0; i < by_degree_.back().size(); ++i) index_.emplace(by_degree_.back()[i], i);
  }
}

const std::vector<Simplex>& Nerve::simplices(std::size_t degree) const {
  return degree < by_degree_.size() ? by_degree_[degree] : kNoSimplices;
}

std::optional<std::size_t> Nerve::index_of(const Simplex& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Nerve build_nerve(const std::vector<Simplex>& simplices, std::size_t vertex_count) {
  if (vertex_count == 0)
    for (const auto& s : simplices)
      for (const auto v : s) vertex_count = std::max(vertex_count, v + 1);
  if (vertex_count == 0) throw InputError("nerve has no vertices");
  return Nerve(vertex_count, simplices);
}

Nerve read_nerve(std::istream& in) {
  std::vector<Simplex> simplices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto raw = parse_integers(strip_comment(line), line_no);
    if (raw.empty()) continue;
    Simplex s = to_vertices(raw, line_no);
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] <= s[i - 1]) throw InputError("line " + std::to_string(line_no) + ": vertices must be strictly increasing");
    simplices.push_back(std::move(s));
  }
  if (simplices.empty()) throw InputError("nerve file lists no simplices");
  return build_nerve(simplices);
}

Rational Cochain::evaluate(const Nerve& nerve, const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != degree + 1) throw DimensionMismatch("tuple length does not match cochain degree");
  std::vector<std::size_t> sorted = tuple;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return 0;
  const auto idx = nerve.index_of(sorted);
  if (!idx) throw InputError("tuple is not a simplex of the nerve");
  return sign * values.at(*idx);
}

Cochain zero_cochain(const Nerve& nerve, std::size_t degree, Ring ring) {
  return Cochain{degree, ring, zero_vec(nerve.count(degree))};
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) throw DimensionMismatch("cochain degrees differ");
  const Ring ring = (a.ring == Ring::integer && b.ring == Ring::integer) ? Ring::integer : Ring::rational;
  return Cochain{a.degree, ring, orbitkit::operator+(a.values, b.values)};
}

Cochain read_cochain(std::istream& in, const Nerve& nerve, std::size_t degree) {
  Cochain c = zero_cochain(nerve, degree, Ring::integer);
  std::vector<bool> assigned(c.values.size(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto raw = parse_integers(strip_comment(line), line_no);
    if (raw.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (raw.size() != degree + 2)
      throw InputError(where + "expected " + std::to_string(degree + 1) + " vertices and a value");
    std::vector<std::size_t> tuple = to_vertices({raw.begin(), raw.end() - 1}, line_no);
    const int sign = sort_with_sign(tuple);
    if (sign == 0) throw InputError(where + "repeated vertex");
    const auto idx = nerve.index_of(tuple);
    if (!idx) throw InputError(where + "simplex is not in the nerve");
    if (assigned[*idx]) throw InputError(where + "simplex listed twice");
    assigned[*idx] = true;
    c.values[*idx] = Rational(static_cast<long>(sign * raw.back()));
  }
  return c;
}

Cochain coboundary(const Cochain& c, const Nerve& nerve) {
  if (c.values.size() != nerve.count(c.degree))
    throw DimensionMismatch("cochain is not defined on the nerve's " + std::to_string(c.degree) + "-simplices");
  Cochain out = zero_cochain(nerve, c.degree + 1, c.ring);
  const auto& upper = nerve.simplices(c.degree + 1);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const auto& s = upper[r];
    for (std::size_t l = 0; l < s.size(); ++l) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != l) face.push_back(s[i]);
      const auto& v = c.values[*nerve.index_of(face)];
      if (l % 2 == 0)
        out.values[r] += v;
      else
        out.values[r] -= v;
    }
  }
  return out;
}

IntMatrix coboundary_matrix(const Nerve& nerve, std::size_t k) {
  const auto& upper = nerve.simplices(k + 1);
  IntMatrix m(upper.size(), nerve.count(k));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const auto& s = upper[r];
    for (std::size_t l = 0; l < s.size(); ++l) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != l) face.push_back(s[i]);
      m(r, *nerve.index_of(face)) += (l % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::string CohomologyGroup::to_string() const {
  std::ostringstream os;
  const char* letter = ring == Ring::integer ? "Z" : "Q";
  bool first = true;
  if (free_rank > 0) {
    os << letter;
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

RationalMatrix as_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

}  // namespace

CohomologyGroup cohomology(const Nerve& nerve, std::size_t k, Ring ring) {
  CohomologyGroup h;
  h.degree = k;
  h.ring = ring;
  const std::size_t cochains = nerve.count(k);
  const IntMatrix outgoing = coboundary_matrix(nerve, k);
  if (ring == Ring::rational) {
    const std::size_t r_out = rank(as_rational(outgoing));
    const std::size_t r_in = k == 0 ? 0 : rank(as_rational(coboundary_matrix(nerve, k - 1)));
    h.free_rank = cochains - r_out - r_in;
    return h;
  }
  const std::size_t r_out = smith_normal_form(outgoing).rank();
  std::size_t r_in = 0;
  if (k > 0) {
    const auto snf = smith_normal_form(coboundary_matrix(nerve, k - 1));
    r_in = snf.rank();
    for (const auto& d : snf.invariants)
      if (d > 1) h.torsion.push_back(d);
  }
  h.free_rank = cochains - r_out - r_in;
  return h;
}

bool ChernClass::is_zero() const {
  for (const auto& c : free)
    if (c != 0) return false;
  for (const auto& t : torsion)
    if (t.residue != 0) return false;
  return true;
}

ChernClass chern_class(const Nerve& nerve, const Cochain& a) {
  if (a.degree != 2) throw InputError("Chern class needs a 2-cochain");
  if (a.values.size() != nerve.count(2)) throw DimensionMismatch("cochain is not defined on the nerve's 2-simplices");
  std::vector<Integer> y_src(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!is_integer(a.values[i])) throw InputError("Chern class needs integer transition data");
    y_src[i] = a.values[i].get_num();
  }

  ChernClass out;
  const auto da = coboundary(a, nerve);
  for (std::size_t i = 0; i < da.values.size(); ++i)
    if (da.values[i] != 0) {
      out.witness = nerve.simplices(3)[i];
      return out;
    }
  out.valid = true;

  // C^2 / im(delta_1) in Smith coordinates y = P a: torsion rows first, free rows after.
  const auto snf1 = smith_normal_form(coboundary_matrix(nerve, 1));
  const std::size_t r = snf1.rank();
  const std::size_t m2 = a.values.size();
  const auto y = snf1.left * y_src;
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& d = snf1.invariants[i];
    if (d == 1) continue;
    Integer res;
    mpz_fdiv_r(res.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
    out.torsion.push_back({res, d});
  }

  // Free part: image of ker(delta_2) in the free rows, with a basis read off
  // another Smith decomposition.
  const auto snf2 = smith_normal_form(coboundary_matrix(nerve, 2));
  const std::size_t kernel_dim = m2 - snf2.rank();
  IntMatrix image(m2 - r, kernel_dim);
  {
    IntMatrix kernel(m2, kernel_dim);
    for (std::size_t j = 0; j < kernel_dim; ++j)
      for (std::size_t i = 0; i < m2; ++i) kernel(i, j) = snf2.right(i, snf2.rank() + j);
    const IntMatrix moved = snf1.left * kernel;
    for (std::size_t i = r; i < m2; ++i)
      for (std::size_t j = 0; j < kernel_dim; ++j) image(i - r, j) = moved(i, j);
  }
  std::vector<Integer> y_free(y.begin() + static_cast<std::ptrdiff_t>(r), y.end());
  const auto snf_img = smith_normal_form(image);
  const auto z = snf_img.left * y_free;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i >= snf_img.rank()) {
      if (z[i] != 0) throw TheoremViolation("cocycle has a free component outside the cohomology lattice");
      continue;
    }
    const Integer& d = snf_img.invariants[i];
    if (z[i] % d != 0) throw TheoremViolation("cocycle free component is not an integral class");
    out.free.push_back(z[i] / d);
  }
  return out;
}

}  // namespace orbitkit::cech
