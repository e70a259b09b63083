#include "supernomial/qpoly.hpp"

#include "supernomial/partition.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace supernomial {

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients)
    coeffs_.emplace_back(c);
  trim();
}

QPolynomial::QPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial QPolynomial::monomial(int exponent, const BigInt& coefficient) {
  if (exponent < 0)
    throw std::invalid_argument("negative exponent in QPolynomial");
  std::vector<BigInt> c(exponent + 1);
  c[exponent] = coefficient;
  return QPolynomial(std::move(c));
}

BigInt QPolynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree())
    return 0;
  return coeffs_[exponent];
}

QPolynomial QPolynomial::shifted(int shift) const {
  if (shift < 0)
    throw std::invalid_argument("negative shift in QPolynomial");
  if (is_zero())
    return {};
  std::vector<BigInt> c(shift);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size());
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e)
    coeffs_[e] += other.coeffs_[e];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  *this = *this * other;
  return *this;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

std::string QPolynomial::str() const {
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e <= degree(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0)
      continue;
    BigInt magnitude = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0 || magnitude != 1)
      out << magnitude.get_str();
    if (e >= 1)
      out << 'q';
    if (e >= 2)
      out << '^' << e;
  }
  return out.str();
}

std::string QPolynomial::dense() const {
  std::string out = "[";
  for (int e = 0; e <= degree(); ++e) {
    if (e)
      out += ',';
    out += coeffs_[e].get_str();
  }
  return out + "]";
}

QPolynomial add(const QPolynomial& a, const QPolynomial& b) { return a + b; }

QPolynomial multiply(const QPolynomial& a, const QPolynomial& b) { return a * b; }

QPolynomial qbinomial(int m, int p) {
  if (m < 0 || p < 0)
    return {};
  if (m == 0 || p == 0)
    return QPolynomial::one();
  // Small arguments recur constantly inside the supernomial sums.
  thread_local std::map<std::pair<int, int>, QPolynomial> cache;
  auto key = std::make_pair(m, p);
  if (auto it = cache.find(key); it != cache.end())
    return it->second;
  // row[j] = G(i, j) for the current width i.
  std::vector<QPolynomial> row(p + 1, QPolynomial::one());
  for (int width = 1; width <= m; ++width)
    for (int height = 1; height <= p; ++height)
      row[height] = row[height] + row[height - 1].shifted(width);
  cache.emplace(key, row[p]);
  return row[p];
}

QPolynomial box_partitions_gf(int m, int p) {
  if (m < 0 || p < 0)
    throw std::invalid_argument("box dimensions must be nonnegative");
  Partition box(std::vector<int>(p, m));
  std::vector<BigInt> counts(m * p + 1);
  for (int size = 0; size <= m * p; ++size)
    for_each_subpartition(box, size, [&](const Partition&) { ++counts[size]; });
  return QPolynomial(std::move(counts));
}

QPolynomial reverse_with_offset(const QPolynomial& poly, int d) {
  if (d < poly.degree())
    throw std::invalid_argument("reverse_with_offset: offset " + std::to_string(d) +
                                " below degree " + std::to_string(poly.degree()));
  if (poly.is_zero())
    return {};
  std::vector<BigInt> c(d + 1);
  for (int e = 0; e <= poly.degree(); ++e)
    c[d - e] = poly.coefficient(e);
  return QPolynomial(std::move(c));
}

BigInt evaluate_at_one(const QPolynomial& poly) {
  BigInt total = 0;
  for (const auto& c : poly.coefficients())
    total += c;
  return total;
}

} // namespace supernomial
