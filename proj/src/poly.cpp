#include "wysiwyg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "wysiwyg/errors.hpp"

namespace wysiwyg {

namespace {

constexpr mp_bitcnt_t kEvalPrecision = 512;

mpf_class horner_mpf(const std::vector<mpz_class>& c, const mpf_class& x) {
  mpf_class acc(0, kEvalPrecision);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += mpf_class(*it, kEvalPrecision);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int degree) {
  if (c == 0) return Poly();
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(r));
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::divexact(const mpz_class& s) const {
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Poly r = divexact(content());
  if (r.lead() < 0) r = -r;
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return Poly();
  if (degree() < d.degree()) throw DomainError("inexact polynomial division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> q(static_cast<std::size_t>(degree() - d.degree() + 1));
  const int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    auto& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t())) {
      throw DomainError("inexact polynomial division");
    }
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
    q[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& x : rem) {
    if (x != 0) throw DomainError("inexact polynomial division");
  }
  return Poly(std::move(q));
}

Poly Poly::pseudo_remainder(const Poly& d) const {
  if (d.is_zero()) throw DomainError("pseudo-remainder by zero");
  Poly r = *this;
  const int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    // r <- lc(d) * r - lc(r) * x^(deg r - deg d) * d
    const mpz_class lr = r.lead();
    const int shift = r.degree() - dd;
    r *= d.lead();
    r -= (d * lr).shifted(shift);
  }
  return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Poly::eval(double x) const {
  return horner_mpf(c_, mpf_class(x, kEvalPrecision)).get_d();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive() * (b.is_zero() ? mpz_class(1) : b.content());
  if (b.is_zero()) return a.primitive() * a.content();
  mpz_class cg;
  const mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = Poly(1);
      break;
    }
    Poly r = x.pseudo_remainder(y);
    x = std::move(y);
    y = r.primitive();
  }
  return x.primitive() * cg;
}

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(Poly p, int shift) : p_(std::move(p)), shift_(shift) { normalize(); }

void Laurent::normalize() {
  if (p_.is_zero()) {
    shift_ = 0;
    return;
  }
  const auto& c = p_.coeffs();
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  if (lo != 0) {
    p_ = Poly(std::vector<mpz_class>(c.begin() + static_cast<std::ptrdiff_t>(lo), c.end()));
    shift_ += static_cast<int>(lo);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(shift_, o.shift_);
  Poly sum = p_.shifted(shift_ - lo) + o.p_.shifted(o.shift_ - lo);
  p_ = std::move(sum);
  shift_ = lo;
  normalize();
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  return Laurent(a.p_ * b.p_, a.shift_ + b.shift_);
}

Laurent Laurent::times_delta_pow(int k) const {
  if (is_zero()) return *this;
  Laurent r = *this;
  r.shift_ += k;
  return r;
}

double Laurent::eval(double delta) const {
  mpf_class x(delta, kEvalPrecision);
  mpf_class v = horner_mpf(p_.coeffs(), x);
  mpf_class s(1, kEvalPrecision);
  if (shift_ >= 0) {
    mpf_pow_ui(s.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(shift_));
    v *= s;
  } else {
    mpf_pow_ui(s.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(-shift_));
    v /= s;
  }
  return v.get_d();
}

mpq_class Laurent::eval(const mpq_class& delta) const {
  mpq_class v = p_.eval(delta);
  mpq_class s = 1;
  for (int i = 0; i < std::abs(shift_); ++i) s *= delta;
  return shift_ >= 0 ? mpq_class(v * s) : mpq_class(v / s);
}

std::string Laurent::to_string() const { return RationalFunction(*this).to_string(); }

// ------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(const Laurent& l) {
  if (l.shift() >= 0) {
    num_ = l.poly().shifted(l.shift());
    den_ = Poly(1);
  } else {
    num_ = l.poly();
    den_ = Poly::monomial(1, -l.shift());
  }
  normalize();
}

RationalFunction RationalFunction::d() {
  return RationalFunction(Poly(std::vector<mpz_class>{-1, 0, 1}), Poly(1));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  mpz_class cn = num_.content(), cd = den_.content(), cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cg != 1) {
    num_ = num_.divexact(cg);
    den_ = den_.divexact(cg);
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(1) / pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

double RationalFunction::eval(double delta) const {
  mpf_class x(delta, kEvalPrecision);
  mpf_class n = horner_mpf(num_.coeffs(), x);
  mpf_class dd = horner_mpf(den_.coeffs(), x);
  if (dd == 0) throw DomainError("rational function evaluated at a pole");
  n /= dd;
  return n.get_d();
}

mpq_class RationalFunction::eval(const mpq_class& delta) const {
  mpq_class dd = den_.eval(delta);
  if (dd == 0) throw DomainError("rational function evaluated at a pole");
  return num_.eval(delta) / dd;
}

namespace {

// Parenthesize sums; in a denominator also scaled monomials, so that
// 1/(2δ) does not read as δ/2.
std::string factor_string(const Poly& p, bool denominator) {
  int terms = 0;
  for (const auto& c : p.coeffs()) terms += (c != 0);
  const bool scaled = p.degree() > 0 && p.lead() != 1;
  std::string s = p.to_string();
  return terms > 1 || (denominator && scaled) ? "(" + s + ")" : s;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return factor_string(num_, false) + "/" + factor_string(den_, true);
}

}  // namespace wysiwyg
