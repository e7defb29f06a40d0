#include "hesselink/state_polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hesselink/errors.hpp"
#include "hesselink/hilbert.hpp"

namespace hesselink {

StateSet::StateSet(int r, int t, Integer Q, std::vector<Monomial> points)
    : r_(r), t_(t), Q_(std::move(Q)), points_(std::move(points)) {
  if (r_ < 1) throw std::invalid_argument("state set needs r >= 1");
  if (points_.empty()) throw std::invalid_argument("empty state set");
  Integer expected = Integer(t_) * Q_;
  for (const auto& p : points_) {
    if (p.num_vars() != r_ + 1)
      throw std::invalid_argument("state point dimension mismatch");
    if (Integer(p.degree()) != expected)
      throw std::invalid_argument("state point coordinate sum is not t*Q");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

RatVec StateSet::center() const {
  Rational c = make_rational(Integer(t_) * Q_, Integer(r_ + 1));
  return RatVec(static_cast<size_t>(r_) + 1, c);
}

StateSet state_degree_d(const HomogeneousPolynomial& f) {
  return StateSet(f.r(), f.degree(), Integer(1), f.support());
}

MultiplicationMatrix multiplication_matrix(const HomogeneousPolynomial& f,
                                           int D) {
  if (D < 0) throw std::invalid_argument("negative twist shift");
  MultiplicationMatrix out;
  out.r = f.r();
  out.d = f.degree();
  out.D = D;
  out.row_monomials = enumerate_monomials(f.r(), D);
  out.col_monomials = enumerate_monomials(f.r(), f.degree() + D);

  std::map<Monomial, size_t> col_index;
  for (size_t j = 0; j < out.col_monomials.size(); ++j)
    col_index.emplace(out.col_monomials[j], j);

  out.entries.reserve(out.row_monomials.size());
  for (const auto& row_m : out.row_monomials) {
    RatVec row(out.col_monomials.size(), Rational(0));
    HomogeneousPolynomial shifted = multiply(f, row_m);
    for (const auto& [m, c] : shifted.terms()) row[col_index.at(m)] = c;
    out.entries.push_back(std::move(row));
  }
  return out;
}

int MultiplicationMatrix::rank() const {
  std::vector<RatVec> work = entries;
  size_t rows = work.size();
  size_t cols = rows ? work[0].size() : 0;
  int rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t p = pivot_row;
    while (p < rows && work[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(work[p], work[pivot_row]);
    for (size_t i = pivot_row + 1; i < rows; ++i) {
      if (work[i][col] == 0) continue;
      Rational factor = work[i][col] / work[pivot_row][col];
      for (size_t j = col; j < cols; ++j)
        work[i][j] -= factor * work[pivot_row][j];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

namespace {

Rational square_minor(const std::vector<RatVec>& entries,
                      const std::vector<size_t>& cols) {
  size_t k = cols.size();
  std::vector<RatVec> sub(k, RatVec(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) sub[i][j] = entries[i][cols[j]];
  return determinant(std::move(sub));
}

struct PruneGuard {
  bool active = false;
  OneParamSubgroup gamma{std::vector<Integer>{Integer(1)}};
  Monomial threshold;

  bool discards(const Monomial& tuple_weight) const {
    return active && monomial_cmp(gamma, tuple_weight, threshold) < 0;
  }
};

// Tuples of matrix columns whose monomial product falls strictly below
// m_alpha^K * (product of all degree-D monomials) in the order induced by the
// degree-d worst direction have provably vanishing minors: every row i of the
// matrix is supported on monomials >= m_alpha * m_{i,D} in that order, which
// forces a large zero block in any such column selection. Pruning by this
// test never changes the computed state.
PruneGuard make_prune_guard(const HomogeneousPolynomial& f,
                            const std::vector<Monomial>& row_monomials) {
  PruneGuard guard;
  PolytopeAnalysis base = nearest_point(state_degree_d(f));
  if (!base.lambda.has_value()) return guard;
  guard.gamma = *base.lambda;

  const Monomial* alpha = &f.support().front();
  for (const auto& m : f.support())
    if (monomial_cmp(guard.gamma, m, *alpha) < 0) alpha = &m;

  std::vector<int> acc(static_cast<size_t>(f.r()) + 1, 0);
  size_t K = row_monomials.size();
  for (const auto& m : row_monomials)
    for (int i = 0; i <= f.r(); ++i) acc[static_cast<size_t>(i)] += m[i];
  for (int i = 0; i <= f.r(); ++i)
    acc[static_cast<size_t>(i)] += static_cast<int>(K) * (*alpha)[i];
  guard.threshold = Monomial(acc);
  guard.active = true;
  return guard;
}

void tuples_rec(const std::vector<size_t>& nnz_cols,
                const std::vector<Monomial>& col_monomials, size_t k,
                size_t start, std::vector<size_t>& chosen, Monomial& weight,
                const PruneGuard& guard, const std::vector<RatVec>& entries,
                std::vector<Monomial>& found) {
  if (chosen.size() == k) {
    if (guard.discards(weight)) return;
    if (square_minor(entries, chosen) != 0) found.push_back(weight);
    return;
  }
  size_t needed = k - chosen.size();
  for (size_t i = start; i + needed <= nnz_cols.size(); ++i) {
    size_t col = nnz_cols[i];
    chosen.push_back(col);
    Monomial saved = weight;
    weight = weight * col_monomials[col];
    tuples_rec(nnz_cols, col_monomials, k, i + 1, chosen, weight, guard,
               entries, found);
    weight = saved;
    chosen.pop_back();
  }
}

}  // namespace

namespace detail {

StateSet state_degree_dD_impl(const HomogeneousPolynomial& f, int D, long cap,
                              bool prune) {
  if (D < 1) throw std::invalid_argument("twist shift must be >= 1");
  if (cap < 1) throw std::invalid_argument("cap must be positive");

  MultiplicationMatrix mat = multiplication_matrix(f, D);
  size_t K = mat.row_monomials.size();

  std::vector<size_t> nnz_cols;
  for (size_t j = 0; j < mat.col_monomials.size(); ++j) {
    for (size_t i = 0; i < K; ++i) {
      if (mat.entries[i][j] != 0) {
        nnz_cols.push_back(j);
        break;
      }
    }
  }

  Integer tuple_count = binomial(static_cast<long>(nnz_cols.size()),
                                 static_cast<long>(K));
  if (tuple_count > cap)
    throw CapExceeded("state at twist " + std::to_string(f.degree() + D) +
                      " needs " + tuple_count.get_str() +
                      " column tuples, above the cap of " +
                      std::to_string(cap));

  PruneGuard guard;
  if (prune) guard = make_prune_guard(f, mat.row_monomials);

  std::vector<Monomial> found;
  std::vector<size_t> chosen;
  Monomial weight(std::vector<int>(static_cast<size_t>(f.r()) + 1, 0));
  tuples_rec(nnz_cols, mat.col_monomials, K, 0, chosen, weight, guard,
             mat.entries, found);

  return StateSet(f.r(), f.degree() + D, Integer(static_cast<long>(K)),
                  std::move(found));
}

}  // namespace detail

StateSet state_degree_dD(const HomogeneousPolynomial& f, int D, long cap) {
  return detail::state_degree_dD_impl(f, D, cap, true);
}

namespace detail {

namespace {

// Exact affine minimum-norm solve: minimize ||sum nu_a q_a||^2 subject to
// sum nu_a == 1, via the bordered Gram system [G 1; 1^T 0] [nu; s] = [0; 1].
// Solvable exactly when the chosen points are affinely independent, which the
// outer iteration maintains.
std::vector<Rational> affine_coords(const std::vector<RatVec>& q,
                                    const std::vector<size_t>& corral) {
  size_t k = corral.size();
  std::vector<RatVec> m(k + 1, RatVec(k + 2, Rational(0)));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) m[a][b] = dot(q[corral[a]], q[corral[b]]);
    m[a][k] = 1;
    m[a][k + 1] = 0;
  }
  for (size_t b = 0; b < k; ++b) m[k][b] = 1;
  m[k][k] = 0;
  m[k][k + 1] = 1;

  for (size_t col = 0; col <= k; ++col) {
    size_t pivot = col;
    while (pivot <= k && m[pivot][col] == 0) ++pivot;
    if (pivot > k)
      throw std::logic_error("affinely dependent working set");
    std::swap(m[pivot], m[col]);
    Rational p = m[col][col];
    for (size_t j = col; j <= k + 1; ++j) m[col][j] /= p;
    for (size_t i = 0; i <= k; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (size_t j = col; j <= k + 1; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  std::vector<Rational> nu(k);
  for (size_t a = 0; a < k; ++a) nu[a] = m[a][k + 1];
  return nu;
}

RatVec combination(const std::vector<RatVec>& q,
                   const std::vector<size_t>& corral,
                   const std::vector<Rational>& coef) {
  RatVec x(q.empty() ? 0 : q[0].size(), Rational(0));
  for (size_t a = 0; a < corral.size(); ++a)
    for (size_t i = 0; i < x.size(); ++i) x[i] += coef[a] * q[corral[a]][i];
  return x;
}

}  // namespace

MinNormResult min_norm_point(const std::vector<RatVec>& points,
                             const RatVec& center) {
  if (points.empty()) throw std::invalid_argument("no points");
  size_t dim = center.size();
  std::vector<RatVec> q;
  q.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("point dimension mismatch");
    RatVec t(dim);
    for (size_t i = 0; i < dim; ++i) t[i] = p[i] - center[i];
    q.push_back(std::move(t));
  }

  // Start from the closest single point; ties go to the lowest index, which
  // is the canonical monomial order when the caller passes a sorted state.
  size_t best = 0;
  Rational best_norm = norm_squared(q[0]);
  for (size_t j = 1; j < q.size(); ++j) {
    Rational nj = norm_squared(q[j]);
    if (nj < best_norm) {
      best = j;
      best_norm = nj;
    }
  }

  std::vector<size_t> corral{best};
  std::vector<Rational> mu_coords{Rational(1)};
  RatVec x = q[best];

  const int max_rounds = 1000 + 100 * static_cast<int>(points.size());
  for (int round = 0; round < max_rounds; ++round) {
    // Optimality: x is the projection iff no point beats it as a direction.
    Rational xx = norm_squared(x);
    size_t entering = q.size();
    Rational entering_value = xx;
    for (size_t j = 0; j < q.size(); ++j) {
      Rational v = dot(x, q[j]);
      if (v < entering_value) {
        entering_value = v;
        entering = j;
      }
    }
    if (entering == q.size()) {
      MinNormResult out;
      out.delta_squared = xx;
      out.nearest = RatVec(dim);
      for (size_t i = 0; i < dim; ++i) out.nearest[i] = x[i] + center[i];
      out.weights.assign(points.size(), Rational(0));
      for (size_t a = 0; a < corral.size(); ++a)
        out.weights[corral[a]] = mu_coords[a];
      return out;
    }

    corral.push_back(entering);
    mu_coords.push_back(Rational(0));

    // Minor cycle: walk toward the affine minimum of the corral, shedding
    // points whose coefficient would go negative, until the minimum lies in
    // the (relative interior of the) convex hull.
    for (;;) {
      std::vector<Rational> nu = affine_coords(q, corral);
      bool any_negative = false, any_zero = false;
      for (const auto& v : nu) {
        if (v < 0) any_negative = true;
        if (v == 0) any_zero = true;
      }
      if (!any_negative) {
        if (any_zero) {
          std::vector<size_t> kept;
          std::vector<Rational> kept_nu;
          for (size_t a = 0; a < corral.size(); ++a) {
            if (nu[a] > 0) {
              kept.push_back(corral[a]);
              kept_nu.push_back(nu[a]);
            }
          }
          corral = std::move(kept);
          nu = std::move(kept_nu);
        }
        mu_coords = nu;
        x = combination(q, corral, mu_coords);
        break;
      }

      bool have_theta = false;
      Rational theta(1);
      for (size_t a = 0; a < corral.size(); ++a) {
        if (nu[a] < 0) {
          Rational bound = mu_coords[a] / (mu_coords[a] - nu[a]);
          if (!have_theta || bound < theta) {
            theta = bound;
            have_theta = true;
          }
        }
      }
      if (!have_theta || theta <= 0 || theta >= 1)
        throw std::logic_error("minimum-norm line search failed");

      std::vector<size_t> kept;
      std::vector<Rational> kept_mu;
      for (size_t a = 0; a < corral.size(); ++a) {
        Rational next = (1 - theta) * mu_coords[a] + theta * nu[a];
        if (next < 0) throw std::logic_error("negative hull coefficient");
        if (next > 0) {
          kept.push_back(corral[a]);
          kept_mu.push_back(next);
        }
      }
      if (kept.size() == corral.size())
        throw std::logic_error("line search dropped no point");
      corral = std::move(kept);
      mu_coords = std::move(kept_mu);
      x = combination(q, corral, mu_coords);
    }
  }
  throw std::logic_error("minimum-norm iteration failed to converge");
}

}  // namespace detail

PolytopeAnalysis nearest_point(const StateSet& state) {
  std::vector<RatVec> pts;
  pts.reserve(state.points().size());
  for (const auto& m : state.points()) {
    RatVec v(static_cast<size_t>(state.r()) + 1);
    for (int i = 0; i <= state.r(); ++i) v[static_cast<size_t>(i)] = m[i];
    pts.push_back(std::move(v));
  }
  RatVec center = state.center();
  detail::MinNormResult res = detail::min_norm_point(pts, center);

  PolytopeAnalysis out{state,
                       center,
                       res.nearest,
                       res.delta_squared,
                       res.weights,
                       std::nullopt,
                       Integer(0)};

  // Certificates. These re-derive the claims from scratch so a solver bug
  // cannot slip a wrong answer through.
  RatVec direction(center.size());
  for (size_t i = 0; i < center.size(); ++i)
    direction[i] = res.nearest[i] - center[i];
  if (norm_squared(direction) != res.delta_squared)
    throw std::logic_error("distance certificate failed");

  Rational weight_sum(0);
  RatVec recombined(center.size(), Rational(0));
  for (size_t j = 0; j < pts.size(); ++j) {
    if (res.weights[j] < 0) throw std::logic_error("negative hull weight");
    weight_sum += res.weights[j];
    for (size_t i = 0; i < center.size(); ++i)
      recombined[i] += res.weights[j] * pts[j][i];
  }
  if (weight_sum != 1 || recombined != res.nearest)
    throw std::logic_error("hull membership certificate failed");

  for (const auto& p : pts) {
    Rational side(0);
    for (size_t i = 0; i < center.size(); ++i)
      side += direction[i] * (p[i] - res.nearest[i]);
    if (side < 0) throw std::logic_error("supporting hyperplane certificate failed");
  }

  if (out.delta_squared > 0) {
    out.lambda = primitive(direction);
    bool first = true;
    for (const auto& m : state.points()) {
      Integer w = pairing(*out.lambda, m);
      if (first || w < out.mu) out.mu = w;
      first = false;
    }
    if (Rational(out.mu) * Rational(out.mu) !=
        out.delta_squared * Rational(out.lambda->norm_squared()))
      throw std::logic_error("duality certificate failed");
  }
  return out;
}

Rational maxmin_delta(const StateSet& state,
                      const std::vector<OneParamSubgroup>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("maxmin_delta needs at least one candidate");
  bool first = true;
  Rational best(0);
  for (const auto& lambda : candidates) {
    Integer v(0);
    bool inner_first = true;
    for (const auto& m : state.points()) {
      Integer w = pairing(lambda, m);
      if (inner_first || w < v) v = w;
      inner_first = false;
    }
    // sign(v) * v^2 / ||lambda||^2: strictly monotone in the normalized
    // distance v/||lambda||, so rational comparison decides exactly.
    Rational signed_square =
        make_rational(v * v, lambda.norm_squared()) * (sgn(v) >= 0 ? 1 : -1);
    if (first || signed_square > best) best = signed_square;
    first = false;
  }
  return best;
}

Rational tau_squared(const Rational& delta_squared, int r, int D) {
  if (r < 1 || D < 0) throw std::invalid_argument("tau_squared domain");
  Integer factor = binomial(r + D, r);
  return delta_squared * Rational(factor * factor);
}

DegreeShiftReport verify_degree_shift(const HomogeneousPolynomial& f, int D,
                                      long cap) {
  PolytopeAnalysis at_d = nearest_point(state_degree_d(f));
  PolytopeAnalysis at_dD = nearest_point(state_degree_dD(f, D, cap));

  DegreeShiftReport report{f.r(),
                           f.degree(),
                           D,
                           at_d.unstable(),
                           at_d,
                           at_dD,
                           tau_squared(at_d.delta_squared, f.r(), D),
                           false,
                           false};
  report.scaling_holds = at_dD.delta_squared == report.expected_delta_squared;
  if (at_d.lambda.has_value() != at_dD.lambda.has_value())
    report.class_preserved = false;
  else if (!at_d.lambda.has_value())
    report.class_preserved = true;
  else
    report.class_preserved = canonical_class_rep(*at_d.lambda) ==
                             canonical_class_rep(*at_dD.lambda);
  return report;
}

}  // namespace hesselink
