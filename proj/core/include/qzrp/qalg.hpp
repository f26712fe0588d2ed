#pragma once

// Exact arithmetic in the deformation parameter q: integer-coefficient
// polynomials, canonical rational functions, and the q-deformed
// integer/factorial/multinomial family plus the c(q,N,K,m) coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qzrp {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in q with exact integer coefficients.
// Invariant: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector (degree() == -1).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(const BigInt& constant);
  explicit QPolynomial(long long constant);
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial monomial(const BigInt& coeff, std::size_t power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t k) const;
  BigInt leading() const;

  QPolynomial operator-() const;
  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return c_ != o.c_; }

  QPolynomial pow(unsigned long long e) const;

  double eval(double q) const;
  // Exact evaluation at q = p/r: returns (numerator, denominator) with
  // denominator = r^degree (not reduced).
  std::pair<BigInt, BigInt> eval_rational(const BigInt& p, const BigInt& r) const;

  // gcd of all coefficients, carrying the sign of the leading coefficient;
  // content of the zero polynomial is 0.
  BigInt content() const;
  QPolynomial primitive_part() const;

  // Exact division; throws std::logic_error if a remainder is left
  // (callers use this where divisibility is a structural guarantee).
  static QPolynomial divexact(const QPolynomial& a, const QPolynomial& b);
  // gcd via the primitive pseudo-remainder sequence; result is primitive
  // with positive leading coefficient.
  static QPolynomial gcd(QPolynomial a, QPolynomial b);

  // Ascending-power text form with explicit integer coefficients,
  // e.g. "7168 + 16454*q + 17*q^8"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  void strip();
  std::vector<BigInt> c_;
};

// Ratio of integer polynomials in canonical form: numerator and denominator
// are coprime, their joint integer content is 1, and the denominator's
// leading coefficient is positive, so equality is structural.
class QRationalFunction {
 public:
  QRationalFunction();  // zero (0/1)
  QRationalFunction(QPolynomial num, QPolynomial den);
  explicit QRationalFunction(QPolynomial num);
  explicit QRationalFunction(long long constant);

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRationalFunction operator+(const QRationalFunction& o) const;
  QRationalFunction operator-(const QRationalFunction& o) const;
  QRationalFunction operator*(const QRationalFunction& o) const;
  QRationalFunction operator/(const QRationalFunction& o) const;
  bool operator==(const QRationalFunction& o) const;
  bool operator!=(const QRationalFunction& o) const { return !(*this == o); }

  // Evaluation at numeric q; throws std::domain_error on a denominator root.
  double eval(double q) const;
  // Exact evaluation at q = p/r as a reduced integer fraction with
  // positive denominator.
  std::pair<BigInt, BigInt> eval_rational(const BigInt& p, const BigInt& r) const;

  // Canonical text form "(c0 + c1*q + ...)/(d0 + d1*q + ...)".
  std::string to_string() const;

 private:
  void canonicalize();
  QPolynomial num_, den_;
};

// Numeric deformation parameter; the model requires 0 < q < 1.
struct QValue {
  double q;
  explicit QValue(double v);
};

// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
QPolynomial q_int(long long k);
// [k]_q^! = [1]_q [2]_q ... [k]_q; [0]_q^! = 1.
QPolynomial q_factorial(long long k);
// [N]_q^! / prod [m_i]_q^! with N = sum m_i; division is verified exact.
QPolynomial q_multinomial(const std::vector<long long>& m);
// (alpha; q)_k = prod_{j=0}^{k-1} (1 - q^j alpha).
QRationalFunction q_pochhammer(const QRationalFunction& alpha, long long k);
// c(q,N,K,m) = sum over K <= i_1 < ... < i_m <= N-1 of q^{i_1+...+i_m};
// requires 0 <= m <= N-K.
QPolynomial c_coeff(long long N, long long K, long long m);

}  // namespace qzrp
