#include "qzrp/qalg.hpp"

#include <algorithm>
#include <cmath>

namespace qzrp {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt int_pow(const BigInt& b, unsigned long long e) {
  BigInt r = 1, base = b;
  unsigned long long n = e;
  while (n) {
    if (n & 1ULL) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

}  // namespace

QPolynomial::QPolynomial(const BigInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPolynomial::QPolynomial(long long constant) : QPolynomial(BigInt(constant)) {}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { strip(); }

QPolynomial QPolynomial::monomial(const BigInt& coeff, std::size_t power) {
  if (coeff == 0) return QPolynomial();
  std::vector<BigInt> c(power + 1, BigInt(0));
  c[power] = coeff;
  return QPolynomial(std::move(c));
}

void QPolynomial::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : BigInt(0);
}

BigInt QPolynomial::leading() const {
  return c_.empty() ? BigInt(0) : c_.back();
}

QPolynomial QPolynomial::operator-() const {
  std::vector<BigInt> c = c_;
  for (auto& v : c) v = -v;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::pow(unsigned long long e) const {
  QPolynomial r(1), base = *this;
  unsigned long long n = e;
  while (n) {
    if (n & 1ULL) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

double QPolynomial::eval(double q) const {
  double r = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * q + static_cast<double>(c_[i]);
  return r;
}

std::pair<BigInt, BigInt> QPolynomial::eval_rational(const BigInt& p, const BigInt& r) const {
  if (r == 0) throw std::domain_error("eval_rational: zero denominator");
  if (is_zero()) return {BigInt(0), BigInt(1)};
  // Horner over the common denominator r^degree.
  BigInt num = 0;
  for (std::size_t i = c_.size(); i-- > 0;) num = num * p + c_[i] * int_pow(r, c_.size() - 1 - i);
  return {num, int_pow(r, c_.size() - 1)};
}

BigInt QPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = int_gcd(g, v);
  if (!c_.empty() && c_.back() < 0) g = -g;
  return g;
}

QPolynomial QPolynomial::primitive_part() const {
  if (is_zero()) return QPolynomial();
  BigInt g = content();
  std::vector<BigInt> c = c_;
  for (auto& v : c) v /= g;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::divexact(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::logic_error("divexact: division by zero polynomial");
  if (a.is_zero()) return QPolynomial();
  if (a.degree() < b.degree()) throw std::logic_error("divexact: remainder left (degree)");
  std::vector<BigInt> rem = a.c_;
  std::vector<BigInt> quot(a.c_.size() - b.c_.size() + 1, BigInt(0));
  const BigInt& lb = b.c_.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt top = rem[i + b.c_.size() - 1];
    if (top == 0) continue;
    if (top % lb != 0) throw std::logic_error("divexact: remainder left (leading)");
    BigInt f = top / lb;
    quot[i] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= f * b.c_[j];
  }
  for (const auto& v : rem)
    if (v != 0) throw std::logic_error("divexact: remainder left");
  return QPolynomial(std::move(quot));
}

namespace {

// Pseudo-remainder of lc(b)^{deg a - deg b + 1} * a by b; the premultiplied
// long division eliminates leading terms by exact integer division.
QPolynomial pseudo_rem(const QPolynomial& a, const QPolynomial& b) {
  const long long d = a.degree() - b.degree();
  if (d < 0) return a;
  const auto& bc = b.coeffs();
  QPolynomial pre = a * QPolynomial(int_pow(b.leading(), static_cast<unsigned long long>(d) + 1));
  std::vector<BigInt> rc = pre.coeffs();
  for (std::size_t i = rc.size(); i-- > 0 && i + 1 >= bc.size();) {
    if (rc[i] == 0) continue;
    if (rc[i] % bc.back() != 0) throw std::logic_error("pseudo_rem: inexact elimination");
    BigInt f = rc[i] / bc.back();
    const std::size_t base = i - (bc.size() - 1);
    for (std::size_t j = 0; j < bc.size(); ++j) rc[base + j] -= f * bc[j];
  }
  rc.resize(bc.size() - 1);
  return QPolynomial(std::move(rc));
}

}  // namespace

QPolynomial QPolynomial::gcd(QPolynomial a, QPolynomial b) {
  if (a.is_zero()) return b.is_zero() ? QPolynomial() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPolynomial rem = pseudo_rem(a, b);
    a = b;
    b = rem.is_zero() ? QPolynomial() : rem.primitive_part();
  }
  if (a.leading() < 0) a = -a;
  return a;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigInt v = c_[k];
    if (first) {
      if (v < 0) {
        s += "-";
        v = -v;
      }
      first = false;
    } else {
      s += (v < 0) ? " - " : " + ";
      if (v < 0) v = -v;
    }
    s += v.str();
    if (k == 1) s += "*q";
    else if (k > 1) s += "*q^" + std::to_string(k);
  }
  return s;
}

QRationalFunction::QRationalFunction() : num_(), den_(1) {}

QRationalFunction::QRationalFunction(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRationalFunction: zero denominator");
  canonicalize();
}

QRationalFunction::QRationalFunction(QPolynomial num) : num_(std::move(num)), den_(1) {}

QRationalFunction::QRationalFunction(long long constant) : num_(constant), den_(1) {}

void QRationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial(1);
    return;
  }
  QPolynomial g = QPolynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = QPolynomial::divexact(num_, g);
    den_ = QPolynomial::divexact(den_, g);
  }
  BigInt cn = num_.content(), cd = den_.content();
  if (cn < 0) cn = -cn;
  if (cd < 0) cd = -cd;
  BigInt joint = cn;
  {
    BigInt a = joint, b = cd;
    while (b != 0) {
      BigInt r = a % b;
      a = b;
      b = r;
    }
    joint = a;
  }
  if (joint > 1) {
    std::vector<BigInt> nc = num_.coeffs(), dc = den_.coeffs();
    for (auto& v : nc) v /= joint;
    for (auto& v : dc) v /= joint;
    num_ = QPolynomial(std::move(nc));
    den_ = QPolynomial(std::move(dc));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRationalFunction QRationalFunction::operator+(const QRationalFunction& o) const {
  return QRationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRationalFunction QRationalFunction::operator-(const QRationalFunction& o) const {
  return QRationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRationalFunction QRationalFunction::operator*(const QRationalFunction& o) const {
  return QRationalFunction(num_ * o.num_, den_ * o.den_);
}

QRationalFunction QRationalFunction::operator/(const QRationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("QRationalFunction: division by zero");
  return QRationalFunction(num_ * o.den_, den_ * o.num_);
}

bool QRationalFunction::operator==(const QRationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

double QRationalFunction::eval(double q) const {
  double d = den_.eval(q);
  if (std::abs(d) < 1e-300) throw std::domain_error("QRationalFunction: evaluation at a pole");
  return num_.eval(q) / d;
}

std::pair<BigInt, BigInt> QRationalFunction::eval_rational(const BigInt& p, const BigInt& r) const {
  auto [nn, nd] = num_.eval_rational(p, r);
  auto [dn, dd] = den_.eval_rational(p, r);
  if (dn == 0) throw std::domain_error("QRationalFunction: evaluation at a pole");
  BigInt top = nn * dd, bot = nd * dn;
  BigInt g = int_gcd(top < 0 ? BigInt(-top) : top, bot < 0 ? BigInt(-bot) : bot);
  if (g > 1) {
    top /= g;
    bot /= g;
  }
  if (bot < 0) {
    top = -top;
    bot = -bot;
  }
  return {top, bot};
}

std::string QRationalFunction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QValue::QValue(double v) : q(v) {
  if (!(v > 0.0 && v < 1.0)) throw std::domain_error("QValue: q must lie in (0,1)");
}

QPolynomial q_int(long long k) {
  if (k < 0) throw std::domain_error("q_int: negative argument");
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(1));
  return QPolynomial(std::move(c));
}

QPolynomial q_factorial(long long k) {
  if (k < 0) throw std::domain_error("q_factorial: negative argument");
  QPolynomial r(1);
  for (long long j = 1; j <= k; ++j) r = r * q_int(j);
  return r;
}

QPolynomial q_multinomial(const std::vector<long long>& m) {
  long long total = 0;
  for (long long v : m) {
    if (v < 0) throw std::domain_error("q_multinomial: negative block");
    total += v;
  }
  QPolynomial r = q_factorial(total);
  for (long long v : m) r = QPolynomial::divexact(r, q_factorial(v));
  return r;
}

QRationalFunction q_pochhammer(const QRationalFunction& alpha, long long k) {
  if (k < 0) throw std::domain_error("q_pochhammer: negative argument");
  QRationalFunction r(1);
  for (long long j = 0; j < k; ++j) {
    QRationalFunction term =
        QRationalFunction(QPolynomial(1)) -
        QRationalFunction(QPolynomial::monomial(BigInt(1), static_cast<std::size_t>(j))) * alpha;
    r = r * term;
  }
  return r;
}

QPolynomial c_coeff(long long N, long long K, long long m) {
  if (m < 0 || m > N - K) throw std::domain_error("c_coeff: m outside [0, N-K]");
  // DP over the admissible index range {K, ..., N-1}:
  // c(q,n,K,j) = c(q,n-1,K,j) + q^{n-1} c(q,n-1,K,j-1).
  std::vector<QPolynomial> row(static_cast<std::size_t>(m) + 1);
  row[0] = QPolynomial(1);
  for (long long n = K + 1; n <= N; ++n) {
    for (long long j = std::min(m, n - K); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j)] +
          QPolynomial::monomial(BigInt(1), static_cast<std::size_t>(n - 1)) *
              row[static_cast<std::size_t>(j - 1)];
    }
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace qzrp
