#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "hesselink/errors.hpp"

namespace hesselink::oracle {

namespace {

// Plain Gauss-Jordan; nullopt when the matrix is singular.
std::optional<RatVec> solve_linear(std::vector<RatVec> m, RatVec rhs) {
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    Rational p = m[col][col];
    for (size_t j = col; j <= n; ++j) m[col][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (size_t j = col; j <= n; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  RatVec out(n);
  for (size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

Rational eval_terms(const std::vector<std::pair<Monomial, Rational>>& terms,
                    const RatVec& point) {
  Rational total(0);
  for (const auto& [m, c] : terms) {
    Rational v = c;
    for (int i = 0; i < m.num_vars(); ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[static_cast<size_t>(i)];
    total += v;
  }
  return total;
}

}  // namespace

NearestPoint brute_force_nearest(const std::vector<RatVec>& points,
                                 const RatVec& center) {
  size_t n = points.size();
  if (n == 0) throw std::invalid_argument("no points");
  if (n > 20) throw std::invalid_argument("too many points for brute force");
  size_t dim = center.size();

  std::vector<RatVec> q(n, RatVec(dim));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < dim; ++i) q[j][i] = points[j][i] - center[i];

  // The minimizer lies in the relative interior of some face, hence is a
  // nonnegative affine combination of an affinely independent subset. Every
  // subset whose bordered Gram system is solvable with nonnegative weights
  // yields a genuine hull point, so the minimum over all of them is exact.
  bool found = false;
  NearestPoint best;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> sel;
    for (size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) sel.push_back(j);
    if (sel.size() > dim + 1) continue;

    size_t k = sel.size();
    std::vector<RatVec> sys(k + 1, RatVec(k + 1, Rational(0)));
    RatVec rhs(k + 1, Rational(0));
    for (size_t a = 0; a < k; ++a) {
      for (size_t b = 0; b < k; ++b) sys[a][b] = dot(q[sel[a]], q[sel[b]]);
      sys[a][k] = 1;
      sys[k][a] = 1;
    }
    rhs[k] = 1;
    auto sol = solve_linear(std::move(sys), std::move(rhs));
    if (!sol) continue;  // affinely dependent subset
    bool nonneg = true;
    for (size_t a = 0; a < k && nonneg; ++a) nonneg = (*sol)[a] >= 0;
    if (!nonneg) continue;

    RatVec y(dim, Rational(0));
    for (size_t a = 0; a < k; ++a)
      for (size_t i = 0; i < dim; ++i) y[i] += (*sol)[a] * q[sel[a]][i];
    Rational d2 = norm_squared(y);
    if (!found || d2 < best.delta_squared) {
      found = true;
      for (size_t i = 0; i < dim; ++i) y[i] += center[i];
      best.nearest = std::move(y);
      best.delta_squared = std::move(d2);
    }
  }
  if (!found) throw std::logic_error("brute force found no candidate");
  return best;
}

std::vector<std::pair<Monomial, Rational>> convolve(
    const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
  std::map<Monomial, Rational> acc;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) acc[mf * mg] += cf * cg;
  std::vector<std::pair<Monomial, Rational>> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, c);
  return out;
}

std::vector<std::pair<Monomial, Rational>> derivative(
    const HomogeneousPolynomial& f, int i) {
  std::vector<std::pair<Monomial, Rational>> out;
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    std::vector<int> e = m.exps();
    e[static_cast<size_t>(i)] -= 1;
    out.emplace_back(Monomial(e), c * m[i]);
  }
  return out;
}

bool singular_at(const HomogeneousPolynomial& f, const RatVec& point) {
  std::vector<std::pair<Monomial, Rational>> self(f.terms().begin(),
                                                  f.terms().end());
  if (eval_terms(self, point) != 0) return false;
  for (int i = 0; i <= f.r(); ++i)
    if (eval_terms(derivative(f, i), point) != 0) return false;
  return true;
}

StateSet random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> r_dist(1, 4);
  std::uniform_int_distribution<int> deg_dist(1, 9);
  std::uniform_int_distribution<int> count_dist(1, 12);
  int r = r_dist(rng);
  int s = deg_dist(rng);
  int count = count_dist(rng);

  std::set<std::vector<int>> seen;
  std::uniform_int_distribution<int> coord(0, r);
  for (int p = 0; p < count; ++p) {
    std::vector<int> e(static_cast<size_t>(r) + 1, 0);
    for (int b = 0; b < s; ++b) e[static_cast<size_t>(coord(rng))] += 1;
    seen.insert(std::move(e));
  }
  std::vector<Monomial> points;
  for (const auto& e : seen) points.emplace_back(e);
  return StateSet(r, s, Integer(1), std::move(points));
}

HomogeneousPolynomial random_sparse_polynomial(std::mt19937_64& rng, int max_r,
                                               int max_d) {
  std::uniform_int_distribution<int> r_dist(1, max_r);
  std::uniform_int_distribution<int> d_dist(2, max_d);
  std::uniform_int_distribution<int> terms_dist(1, 4);
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  for (;;) {
    int r = r_dist(rng);
    int d = d_dist(rng);
    int nterms = terms_dist(rng);
    std::uniform_int_distribution<int> coord(0, r);
    HomogeneousPolynomial::TermMap terms;
    for (int t = 0; t < nterms; ++t) {
      std::vector<int> e(static_cast<size_t>(r) + 1, 0);
      for (int b = 0; b < d; ++b) e[static_cast<size_t>(coord(rng))] += 1;
      int c = coeff_dist(rng);
      if (c == 0) c = 1;
      terms[Monomial(e)] += c;
    }
    try {
      return HomogeneousPolynomial::from_terms(r, std::move(terms));
    } catch (const ParseError&) {
      // coefficients cancelled to zero; draw again
    }
  }
}

Monomial random_weakly_increasing_exponents(std::mt19937_64& rng, int r,
                                            int max_d) {
  std::uniform_int_distribution<int> d_dist(1, max_d);
  std::uniform_int_distribution<int> coord(0, r);
  for (;;) {
    int d = d_dist(rng);
    std::vector<int> e(static_cast<size_t>(r) + 1, 0);
    for (int b = 0; b < d; ++b) e[static_cast<size_t>(coord(rng))] += 1;
    std::sort(e.begin(), e.end());
    // the balanced vector has no destabilizing direction; skip it
    bool constant = true;
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] != e[0]) constant = false;
    if (!constant) return Monomial(e);
  }
}

}  // namespace hesselink::oracle
