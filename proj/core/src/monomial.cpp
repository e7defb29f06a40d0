#include "hesselink/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace hesselink {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("negative exponent in monomial");
}

int Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (e_.size() != other.e_.size())
    throw std::invalid_argument("monomial product across variable counts");
  std::vector<int> out(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] + other.e_[i];
  return Monomial(out);
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (e_.size() != other.e_.size())
    return e_.size() <=> other.e_.size();
  int da = degree(), db = other.degree();
  if (da != db) return da <=> db;
  // Lex tiebreak with the highest-index variable most significant.
  for (size_t i = e_.size(); i-- > 0;) {
    if (e_[i] != other.e_[i]) return e_[i] <=> other.e_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (e_[i] != 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void enumerate_rec(int index, int deg_left, std::vector<int>& acc,
                   std::vector<Monomial>& out) {
  if (index == 0) {
    acc[0] = deg_left;
    out.push_back(Monomial(acc));
    return;
  }
  // The comparator treats the highest-index variable as most significant,
  // so filling exponents from the back in ascending order emits the whole
  // list ascending under operator<.
  for (int e = 0; e <= deg_left; ++e) {
    acc[static_cast<size_t>(index)] = e;
    enumerate_rec(index - 1, deg_left - e, acc, out);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int r, int D) {
  if (r < 0 || D < 0)
    throw std::invalid_argument("enumerate_monomials needs r, D >= 0");
  std::vector<Monomial> out;
  std::vector<int> acc(static_cast<size_t>(r) + 1, 0);
  enumerate_rec(r, D, acc, out);
  return out;
}

}  // namespace hesselink
