#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qhaar {

struct parse_error : std::runtime_error {
  std::size_t position;
  explicit parse_error(const std::string& what, std::size_t pos = 0)
      : std::runtime_error(what), position(pos) {}
};

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Stored densely from exponent 0 with the top coefficient nonzero; the zero
/// polynomial has no stored coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long value);  // NOLINT: implicit by design, mirrors integer literals
  explicit IntPoly(const mpz_class& value);

  static IntPoly monomial(const mpz_class& coeff, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monomial() const;

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  std::size_t term_count() const;

  const mpz_class& coeff(int exponent) const;
  const mpz_class& leading_coeff() const;

  void set_coeff(int exponent, const mpz_class& value);
  void add_to_coeff(int exponent, const mpz_class& value);

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator*(const IntPoly& other) const;
  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const IntPoly& other) const { return !(*this == other); }

  IntPoly mul_monomial(const mpz_class& coeff, int exponent) const;
  /// Shift all exponents by k (k may be negative only down to the valuation).
  IntPoly shifted(int k) const;

  /// Exact division; throws std::domain_error if the division is not exact.
  IntPoly divided_exact(const IntPoly& divisor) const;

  /// GCD of all coefficients, non-negative. 0 for the zero polynomial.
  mpz_class content() const;
  IntPoly primitive_part() const;

  /// Polynomial gcd over Z, content included, leading coefficient positive.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  mpq_class eval(const mpq_class& point) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;  // coeffs_[e] is the coefficient of q^e
};

/// Element of the field Q(q): a fraction of integer polynomials kept in
/// canonical form (fully cancelled, coprime contents, positive leading
/// denominator coefficient). Equality is structural.
class QRational {
 public:
  QRational() : num_(), den_(1) {}
  QRational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  QRational(IntPoly num, IntPoly den);

  /// The canonical element equal to q^k for any integer k.
  static QRational q_pow(int k);
  /// The generator q itself.
  static QRational q() { return q_pow(1); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  QRational operator-() const;
  QRational operator+(const QRational& other) const;
  QRational operator-(const QRational& other) const;
  QRational operator*(const QRational& other) const;
  QRational operator/(const QRational& other) const;
  QRational& operator+=(const QRational& other) { return *this = *this + other; }
  QRational& operator-=(const QRational& other) { return *this = *this - other; }
  QRational& operator*=(const QRational& other) { return *this = *this * other; }
  QRational& operator/=(const QRational& other) { return *this = *this / other; }

  QRational inv() const;
  /// Integer power; negative exponents invert (argument must be nonzero then).
  QRational pow(int k) const;

  bool operator==(const QRational& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const QRational& other) const { return !(*this == other); }

  /// Exact value at a rational point; throws pole_error if the (fully
  /// cancelled) denominator vanishes there.
  mpq_class eval_at(const mpq_class& point) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void canonicalize();

  IntPoly num_;
  IntPoly den_;
};

inline QRational operator*(long lhs, const QRational& rhs) { return QRational(lhs) * rhs; }
inline QRational operator+(long lhs, const QRational& rhs) { return QRational(lhs) + rhs; }
inline QRational operator-(long lhs, const QRational& rhs) { return QRational(lhs) - rhs; }

}  // namespace qhaar
