#include "orbitkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "orbitkit/error.hpp"

namespace orbitkit {

RationalMatrix reflection(const Vec& alpha, const RootSystem& rs) {
  rs.require_ambient(alpha);
  if (!rs.find(alpha)) throw InputError("reflection: " + to_string(alpha) + " is not a root of " + rs.spec().to_string());
  const std::size_t d = rs.dim();
  const Vec g_alpha = rs.gram() * alpha;
  const Rational scale = Rational(2) / rs.pairing(alpha, alpha);
  RationalMatrix m = RationalMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) -= scale * alpha[i] * g_alpha[j];
  return m;
}

Vec reflect(const Vec& v, std::size_t root, const RootSystem& rs) {
  return v - rs.coroot_pairing(v, root) * rs.root(root);
}

namespace {

// s_alpha * m, computed as m - (2/(alpha,alpha)) alpha (G alpha)^T m.
RationalMatrix reflect_left(const RationalMatrix& m, const Vec& alpha, const RootSystem& rs) {
  const std::size_t d = rs.dim();
  const Vec g_alpha = rs.gram() * alpha;
  const Rational scale = Rational(2) / rs.pairing(alpha, alpha);
  Vec row_coeff = zero_vec(d);  // (G alpha)^T m
  for (std::size_t k = 0; k < d; ++k) {
    if (g_alpha[k] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) row_coeff[j] += g_alpha[k] * m(k, j);
  }
  RationalMatrix out = m;
  for (std::size_t i = 0; i < d; ++i) {
    if (alpha[i] == 0) continue;
    const Rational f = scale * alpha[i];
    for (std::size_t j = 0; j < d; ++j) out(i, j) -= f * row_coeff[j];
  }
  return out;
}

}  // namespace

WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t cap) {
  WeylGroup w;
  w.rs = &rs;
  w.order = standard_order(rs);
  for (const auto s : w.order.simple) w.generators.push_back(reflection(rs.root(s), rs));

  // Words are recorded as the BFS discovers elements, so each word is shortest.
  // New element = s_g * parent, i.e. the word of the parent followed by g.
  std::map<RationalMatrix, Word> seen;
  std::deque<const RationalMatrix*> frontier;
  auto [it, inserted] = seen.emplace(RationalMatrix::identity(rs.dim()), Word{});
  frontier.push_back(&it->first);
  if (cap < 1) throw CapExceeded(cap);
  while (!frontier.empty()) {
    const RationalMatrix* current = frontier.front();
    frontier.pop_front();
    const Word parent_word = seen.at(*current);
    for (std::size_t g = 0; g < w.order.simple.size(); ++g) {
      RationalMatrix next = reflect_left(*current, rs.root(w.order.simple[g]), rs);
      if (seen.count(next)) continue;
      Word word = parent_word;
      word.push_back(g);
      auto [pos, ok] = seen.emplace(std::move(next), std::move(word));
      if (seen.size() > cap) throw CapExceeded(cap);
      frontier.push_back(&pos->first);
    }
  }
  w.elements.reserve(seen.size());
  for (auto& [m, word] : seen) w.elements.push_back({m, word});
  return w;
}

WeylOrbit weyl_orbit(const Vec& lambda, const WeylGroup& w) {
  const auto& rs = *w.rs;
  rs.require_ambient(lambda);
  std::set<Vec> seen{lambda};
  std::deque<Vec> frontier{lambda};
  while (!frontier.empty()) {
    const Vec v = frontier.front();
    frontier.pop_front();
    for (const auto s : w.order.simple) {
      Vec next = reflect(v, s, rs);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  WeylOrbit orbit;
  orbit.base = lambda;
  orbit.points.assign(seen.begin(), seen.end());
  orbit.stabilizer_order = w.size() / orbit.points.size();
  return orbit;
}

Vec apply_word(const Vec& v, const Word& word, const RootOrder& order) {
  Vec out = v;
  for (const auto g : word) out = reflect(out, order.simple.at(g), *order.rs);
  return out;
}

DominantResult dominant_representative(const Vec& lambda, const RootOrder& order, const WeylGroup& w) {
  const auto& rs = *order.rs;
  if (w.rs != order.rs && !(w.rs->spec() == rs.spec()))
    throw InputError("dominant_representative: order and Weyl group come from different root systems");
  rs.require_ambient(lambda);
  DominantResult out{lambda, {}};
  // Each step strictly increases (v, rho), and the orbit is finite.
  while (true) {
    bool moved = false;
    for (std::size_t g = 0; g < order.simple.size(); ++g) {
      if (rs.pairing(out.weight, rs.root(order.simple[g])) < 0) {
        out.weight = reflect(out.weight, order.simple[g], rs);
        out.word.push_back(g);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return out;
}

}  // namespace orbitkit
