#include "hesselink/group_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace hesselink {

Rational determinant(std::vector<RatVec> rows) {
  size_t n = rows.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[col][col];
      for (size_t j = col; j < n; ++j) rows[i][j] -= factor * rows[col][j];
    }
  }
  return det;
}

GroupElement::GroupElement(std::vector<RatVec> rows) : rows_(std::move(rows)) {
  size_t n = rows_.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : rows_)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  det_ = determinant(rows_);
  if (det_ == 0) throw std::invalid_argument("singular matrix");
}

GroupElement GroupElement::identity(int n) {
  std::vector<RatVec> rows(static_cast<size_t>(n),
                           RatVec(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i)
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return GroupElement(std::move(rows));
}

GroupElement GroupElement::permutation(const std::vector<int>& sigma) {
  size_t n = sigma.size();
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || static_cast<size_t>(v) >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
  std::vector<RatVec> rows(n, RatVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) rows[i][static_cast<size_t>(sigma[i])] = 1;
  return GroupElement(std::move(rows));
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (n() != other.n()) throw std::invalid_argument("size mismatch in product");
  size_t m = rows_.size();
  std::vector<RatVec> out(m, RatVec(m, Rational(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (rows_[i][k] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        out[i][j] += rows_[i][k] * other.rows_[k][j];
    }
  return GroupElement(std::move(out));
}

GroupElement GroupElement::inverse() const {
  size_t m = rows_.size();
  std::vector<RatVec> work = rows_;
  std::vector<RatVec> inv(m, RatVec(m, Rational(0)));
  for (size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < m; ++col) {
    size_t pivot = col;
    while (work[pivot][col] == 0) ++pivot;  // in bounds: matrix is invertible
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = work[col][col];
    for (size_t j = 0; j < m; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t i = 0; i < m; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rational factor = work[i][col];
      for (size_t j = 0; j < m; ++j) {
        work[i][j] -= factor * work[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return GroupElement(std::move(inv));
}

bool GroupElement::is_lower_triangular() const {
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (at(i, j) != 0) return false;
  return true;
}

std::string GroupElement::str() const {
  std::string out = "[";
  for (int i = 0; i < n(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < n(); ++j) {
      if (j) out += " ";
      out += at(i, j).get_str();
    }
  }
  return out + "]";
}

ProjectivePoint::ProjectivePoint(RatVec coords) : coords_(std::move(coords)) {
  size_t first = 0;
  while (first < coords_.size() && coords_[first] == 0) ++first;
  if (first == coords_.size())
    throw std::invalid_argument("the zero vector is not a projective point");
  Rational scale = coords_[first];
  for (auto& c : coords_) c /= scale;
}

ProjectivePoint ProjectivePoint::coordinate_point(int r, int i) {
  RatVec v(static_cast<size_t>(r) + 1, Rational(0));
  v[static_cast<size_t>(i)] = 1;
  return ProjectivePoint(std::move(v));
}

std::string ProjectivePoint::str() const {
  std::string out = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += " : ";
    out += coords_[i].get_str();
  }
  return out + "]";
}

OneParamSubgroup::OneParamSubgroup(std::vector<Integer> weights)
    : w_(std::move(weights)) {
  bool all_zero = true;
  for (const auto& x : w_)
    if (x != 0) all_zero = false;
  if (w_.empty() || all_zero)
    throw std::invalid_argument("one-parameter subgroup must be nonzero");
}

Integer OneParamSubgroup::norm_squared() const {
  Integer acc(0);
  for (const auto& x : w_) acc += x * x;
  return acc;
}

Integer OneParamSubgroup::min_weight() const {
  return *std::min_element(w_.begin(), w_.end());
}

Integer OneParamSubgroup::max_weight() const {
  return *std::max_element(w_.begin(), w_.end());
}

bool OneParamSubgroup::sum_is_zero() const {
  Integer acc(0);
  for (const auto& x : w_) acc += x;
  return acc == 0;
}

bool OneParamSubgroup::is_indivisible() const {
  Integer g(0);
  for (const auto& x : w_) g = gcd(g, x);
  return g == 1;
}

bool OneParamSubgroup::weakly_increasing() const {
  for (size_t i = 1; i < w_.size(); ++i)
    if (w_[i] < w_[i - 1]) return false;
  return true;
}

std::string OneParamSubgroup::str() const {
  std::string out = "(";
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ", ";
    out += w_[i].get_str();
  }
  return out + ")";
}

HomogeneousPolynomial act(const GroupElement& g,
                          const HomogeneousPolynomial& f) {
  if (g.n() != f.r() + 1)
    throw std::invalid_argument("matrix size does not match variable count");
  int r = f.r();

  // act(g, f)(v) = f(v*g): substitute column j of g, as a linear form in the
  // new variables, for x_j. Powers of each column are cached across terms.
  std::vector<HomogeneousPolynomial> columns;
  columns.reserve(static_cast<size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) {
    HomogeneousPolynomial::TermMap terms;
    for (int i = 0; i <= r; ++i) {
      if (g.at(i, j) == 0) continue;
      std::vector<int> e(static_cast<size_t>(r) + 1, 0);
      e[static_cast<size_t>(i)] = 1;
      terms.emplace(Monomial(e), g.at(i, j));
    }
    columns.push_back(HomogeneousPolynomial::from_terms(r, std::move(terms)));
  }

  HomogeneousPolynomial one = HomogeneousPolynomial::monomial(
      r, Monomial(std::vector<int>(static_cast<size_t>(r) + 1, 0)));
  std::vector<std::vector<HomogeneousPolynomial>> powers(
      static_cast<size_t>(r) + 1, {one});

  auto column_power = [&](int j, int k) -> const HomogeneousPolynomial& {
    auto& cache = powers[static_cast<size_t>(j)];
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(multiply(cache.back(), columns[static_cast<size_t>(j)]));
    return cache[static_cast<size_t>(k)];
  };

  HomogeneousPolynomial::TermMap total;
  for (const auto& [m, c] : f.terms()) {
    HomogeneousPolynomial prod = one;
    for (int j = 0; j <= r; ++j)
      if (m[j] > 0) prod = multiply(prod, column_power(j, m[j]));
    for (const auto& [pm, pc] : prod.terms()) total[pm] += c * pc;
  }
  return HomogeneousPolynomial::from_terms(r, std::move(total));
}

ProjectivePoint act_point(const ProjectivePoint& p, const GroupElement& g) {
  if (g.n() != p.r() + 1)
    throw std::invalid_argument("matrix size does not match point dimension");
  size_t n = p.coords().size();
  RatVec out(n, Rational(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      out[j] += p.coords()[i] * g.at(static_cast<int>(i), static_cast<int>(j));
  return ProjectivePoint(std::move(out));
}

Integer pairing(const OneParamSubgroup& lambda, const Monomial& m) {
  if (lambda.n() != m.num_vars())
    throw std::invalid_argument("pairing dimension mismatch");
  Integer acc(0);
  for (int i = 0; i < lambda.n(); ++i) acc += lambda[i] * m[i];
  return acc;
}

Rational pairing(const RatVec& direction, const Monomial& m) {
  if (static_cast<int>(direction.size()) != m.num_vars())
    throw std::invalid_argument("pairing dimension mismatch");
  Rational acc(0);
  for (size_t i = 0; i < direction.size(); ++i)
    acc += direction[i] * m[static_cast<int>(i)];
  return acc;
}

Integer mu(const HomogeneousPolynomial& f, const OneParamSubgroup& lambda) {
  bool first = true;
  Integer best(0);
  for (const auto& m : f.support()) {
    Integer w = pairing(lambda, m);
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

int monomial_cmp(const OneParamSubgroup& lambda, const Monomial& a,
                 const Monomial& b) {
  Integer wa = pairing(lambda, a);
  Integer wb = pairing(lambda, b);
  if (wa != wb) return wa < wb ? -1 : 1;
  auto ord = a <=> b;
  if (ord == std::strong_ordering::equal) return 0;
  return ord == std::strong_ordering::less ? -1 : 1;
}

OneParamSubgroup conjugate_by_permutation(const std::vector<int>& sigma,
                                          const OneParamSubgroup& lambda) {
  if (static_cast<int>(sigma.size()) != lambda.n())
    throw std::invalid_argument("permutation size mismatch");
  // Pull-back: matches the exponent-vector pull-back act(permutation(sigma))
  // performs, so mu is equivariant.
  std::vector<Integer> out(sigma.size());
  for (size_t k = 0; k < sigma.size(); ++k)
    out[k] = lambda[sigma[k]];
  return OneParamSubgroup(std::move(out));
}

OneParamSubgroup canonical_class_rep(const OneParamSubgroup& lambda) {
  std::vector<Integer> w = lambda.weights();
  std::sort(w.begin(), w.end(), [](const Integer& a, const Integer& b) {
    return a > b;
  });
  return OneParamSubgroup(std::move(w));
}

OneParamSubgroup primitive(const RatVec& v) {
  if (is_zero_vec(v))
    throw std::invalid_argument("primitive direction of the zero vector");
  Integer denom_lcm(1);
  for (const auto& q : v) denom_lcm = lcm(denom_lcm, Integer(q.get_den()));
  std::vector<Integer> w;
  w.reserve(v.size());
  Integer g(0);
  for (const auto& q : v) {
    Integer scaled = Integer(q.get_num()) * (denom_lcm / Integer(q.get_den()));
    g = gcd(g, scaled);
    w.push_back(scaled);
  }
  for (auto& x : w) x /= g;
  return OneParamSubgroup(std::move(w));
}

}  // namespace hesselink
