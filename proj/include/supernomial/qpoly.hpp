#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace supernomial {

using BigInt = mpz_class;

/// Polynomial in q with arbitrary-precision integer coefficients, stored
/// densely in ascending order with no trailing zero coefficients. The zero
/// polynomial has no coefficients and degree -1.
class QPolynomial {
public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<long> coefficients);
  explicit QPolynomial(std::vector<BigInt> coefficients);

  static QPolynomial one() { return monomial(0); }
  static QPolynomial monomial(int exponent, const BigInt& coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int exponent) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// Multiplies by q^shift (shift ≥ 0).
  QPolynomial shifted(int shift) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "1 + 2q + 4q^2"; "0" for the zero polynomial.
  std::string str() const;
  /// "[1,2,4]"; "[]" for zero.
  std::string dense() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial multiply(const QPolynomial& a, const QPolynomial& b);

/// q-binomial [m+p; m,p] = (q)_{m+p}/((q)_m (q)_p), computed by the
/// recurrence G(m,p) = G(m-1,p) + q^m G(m,p-1). Zero if m or p is negative.
QPolynomial qbinomial(int m, int p);

/// Generating function of partitions inside an m-wide, p-high box, by
/// explicit enumeration.
QPolynomial box_partitions_gf(int m, int p);

/// q^d P(1/q). Throws std::invalid_argument when d < degree(P).
QPolynomial reverse_with_offset(const QPolynomial& poly, int d);

BigInt evaluate_at_one(const QPolynomial& poly);

} // namespace supernomial
