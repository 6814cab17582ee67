#pragma once

// Exact scalars in the loop parameter delta: integer polynomials, Laurent
// polynomials and reduced rational functions, all over GMP integers.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wysiwyg {

/// Polynomial in delta with integer coefficients, ascending degree, no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, int degree);
  static Poly delta() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lead() const { return c_.back(); }
  mpz_class coeff(int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpz_class& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly shifted(int k) const;  // multiply by delta^k, k >= 0
  Poly pow(unsigned e) const;

  /// gcd of the coefficients (non-negative); 0 for the zero polynomial.
  mpz_class content() const;
  Poly primitive() const;
  /// Exact division by an integer that divides every coefficient.
  Poly divexact(const mpz_class& s) const;
  /// Exact polynomial division; throws DomainError if `d` does not divide.
  Poly divexact(const Poly& d) const;
  /// lc(d)^(deg - deg d + 1) * this  mod d.
  Poly pseudo_remainder(const Poly& d) const;

  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  /// Descending-degree rendering, e.g. "δ^2-3".
  std::string to_string(const std::string& var = "δ") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// gcd in Z[delta], normalized to a positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

/// p(delta) * delta^shift with p(0) != 0 (or p == 0).
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) : p_(c) {}  // NOLINT(google-explicit-constructor)
  Laurent(Poly p, int shift);

  static Laurent delta_pow(int k) { return Laurent(Poly(1), k); }

  bool is_zero() const { return p_.is_zero(); }
  const Poly& poly() const { return p_; }
  int shift() const { return shift_; }
  /// Lowest and highest exponents present.
  int low() const { return shift_; }
  int high() const { return shift_ + p_.degree(); }

  Laurent operator-() const { return Laurent(-p_, shift_); }
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent times_delta_pow(int k) const;
  friend bool operator==(const Laurent&, const Laurent&) = default;

  double eval(double delta) const;
  mpq_class eval(const mpq_class& delta) const;
  std::string to_string() const;

 private:
  void normalize();
  Poly p_;
  int shift_ = 0;
};

/// Reduced quotient num/den in Q(delta): gcd(num, den) = 1, integer
/// contents coprime, den has positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(Poly num, Poly den);
  RationalFunction(const Laurent& l);  // NOLINT(google-explicit-constructor)

  static RationalFunction delta() { return RationalFunction(Poly::delta(), Poly(1)); }
  /// d = delta^2 - 1.
  static RationalFunction d();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction pow(int e) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  double eval(double delta) const;
  /// Exact value at a rational delta; throws DomainError at a pole.
  mpq_class eval(const mpq_class& delta) const;

  /// `num` alone when den == 1, otherwise `(num)/(den)`, descending
  /// degree, parentheses only where needed: "(δ^2-3)/(δ^2-2)", "1/δ".
  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace wysiwyg
