#include "qhaar/qfield.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qhaar {

namespace {
const mpz_class kZero(0);
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

IntPoly::IntPoly(const mpz_class& value) {
  if (value != 0) coeffs_.push_back(value);
}

IntPoly IntPoly::monomial(const mpz_class& coeff, int exponent) {
  IntPoly p;
  if (coeff != 0) {
    if (exponent < 0) throw std::domain_error("IntPoly: negative exponent");
    p.coeffs_.resize(exponent + 1);
    p.coeffs_[exponent] = coeff;
  }
  return p;
}

bool IntPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

std::size_t IntPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

const mpz_class& IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[exponent];
}

const mpz_class& IntPoly::leading_coeff() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

void IntPoly::set_coeff(int exponent, const mpz_class& value) {
  if (exponent < 0) throw std::domain_error("IntPoly: negative exponent");
  if (exponent >= static_cast<int>(coeffs_.size())) {
    if (value == 0) return;
    coeffs_.resize(exponent + 1);
  }
  coeffs_[exponent] = value;
  trim();
}

void IntPoly::add_to_coeff(int exponent, const mpz_class& value) {
  if (exponent < 0) throw std::domain_error("IntPoly: negative exponent");
  if (value == 0) return;
  if (exponent >= static_cast<int>(coeffs_.size())) coeffs_.resize(exponent + 1);
  coeffs_[exponent] += value;
  trim();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  IntPoly r = *this;
  if (other.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
  IntPoly r = *this;
  if (other.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r.coeffs_[i] -= other.coeffs_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  IntPoly r;
  if (coeffs_.empty() || other.coeffs_.empty()) return r;
  r.coeffs_.resize(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::mul_monomial(const mpz_class& coeff, int exponent) const {
  IntPoly r;
  if (coeff == 0 || coeffs_.empty()) return r;
  r.coeffs_.resize(coeffs_.size() + exponent);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + exponent] = coeffs_[i] * coeff;
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (coeffs_.empty() || k == 0) {
    IntPoly r = *this;
    return r;
  }
  if (k < 0 && valuation() < -k) throw std::domain_error("IntPoly::shifted: negative exponent");
  IntPoly r;
  r.coeffs_.resize(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) r.coeffs_[i + k] = coeffs_[i];
  }
  return r;
}

IntPoly IntPoly::divided_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
  IntPoly rem = *this;
  IntPoly quot;
  const int dd = divisor.degree();
  const mpz_class& dl = divisor.leading_coeff();
  if (!rem.is_zero()) {
    if (rem.degree() < dd) throw std::domain_error("IntPoly: inexact division");
    quot.coeffs_.resize(rem.degree() - dd + 1);
  }
  mpz_class qc, r;
  while (!rem.is_zero()) {
    int rd = rem.degree();
    if (rd < dd) throw std::domain_error("IntPoly: inexact division");
    mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(), dl.get_mpz_t());
    if (r != 0) throw std::domain_error("IntPoly: inexact division");
    quot.coeffs_[rd - dd] = qc;
    // rem -= qc * q^(rd-dd) * divisor
    for (int i = 0; i <= dd; ++i) {
      if (divisor.coeffs_[i] != 0) rem.coeffs_[i + rd - dd] -= qc * divisor.coeffs_[i];
    }
    rem.trim();
  }
  quot.trim();
  return quot;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  mpz_class c = content();
  if (leading_coeff() < 0) c = -c;
  if (c == 1) return *this;
  IntPoly r;
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) r.coeffs_[i] = coeffs_[i] / c;
  }
  return r;
}

namespace {

// Pseudo-remainder of a by b (in place): multiplies a through by the leading
// coefficient of b as needed so the division stays over Z.
void pseudo_rem_inplace(IntPoly& a, const IntPoly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.leading_coeff();
  while (!a.is_zero() && a.degree() >= db) {
    const int da = a.degree();
    const mpz_class la = a.leading_coeff();
    IntPoly next;
    if (lb != 1) {
      next = a.mul_monomial(lb, 0) - b.mul_monomial(la, da - db);
    } else {
      next = a - b.mul_monomial(la, da - db);
    }
    a = std::move(next);
  }
}

// Primitive PRS; correct for any input, used as the fallback when the
// modular images keep failing the division check.
IntPoly gcd_prs(IntPoly pa, IntPoly pb) {
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    pseudo_rem_inplace(pa, pb);
    pa = pa.primitive_part();
    std::swap(pa, pb);
  }
  return pa;
}

// Exact division probe without exceptions.
bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly* quot_out = nullptr) {
  if (b.is_zero()) return false;
  IntPoly rem = a;
  IntPoly quot;
  const int dd = b.degree();
  const mpz_class& dl = b.leading_coeff();
  mpz_class qc, r;
  while (!rem.is_zero()) {
    int rd = rem.degree();
    if (rd < dd) return false;
    mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(), dl.get_mpz_t());
    if (r != 0) return false;
    quot.add_to_coeff(rd - dd, qc);
    rem = rem - b.mul_monomial(qc, rd - dd);
  }
  if (quot_out) *quot_out = std::move(quot);
  return true;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Word-size primes for modular gcd images (below 2^62 so products fit u128).
constexpr u64 kGcdPrimes[] = {
    4611686018427387847ull, 4611686018427387787ull, 4611686018427387761ull,
    4611686018427387729ull, 4611686018427387633ull, 4611686018427387619ull,
    4611686018427387527ull, 4611686018427387449ull, 4611686018427387407ull,
    4611686018427387383ull, 4611686018427387331ull, 4611686018427387241ull,
    4611686018427387169ull, 4611686018427387107ull, 4611686018427387089ull,
    4611686018427387043ull,
};

u64 mod_mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 mod_pow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

void trim_mod(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Monic gcd of the two images in Z_p[x].
std::vector<u64> gcd_mod_p(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim_mod(a);
  trim_mod(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a mod b
    const u64 binv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
      u64 factor = mod_mul(a.back(), binv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        u64 sub = mod_mul(factor, b[i], p);
        u64& cell = a[off + i];
        cell = cell >= sub ? cell - sub : cell + p - sub;
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = mod_inv(a.back(), p);
    for (auto& c : a) c = mod_mul(c, inv, p);
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.leading_coeff() < 0 ? -b : b;
  if (b.is_zero()) return a.leading_coeff() < 0 ? -a : a;

  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  int val = std::min(a.valuation(), b.valuation());
  if (a.is_monomial() || b.is_monomial()) return monomial(cg, val);

  IntPoly pa = a.primitive_part().shifted(-a.valuation());
  IntPoly pb = b.primitive_part().shifted(-b.valuation());
  if (pa == pb) return pa.mul_monomial(cg, val);
  if (pa.degree() == 0 || pb.degree() == 0) return monomial(cg, val);

  // Small-prime modular images with CRT lifting; a candidate counts only
  // once it divides both inputs exactly, so unlucky primes cannot leak
  // through. The primitive PRS remains as the unconditional fallback.
  mpz_class lcg;
  mpz_gcd(lcg.get_mpz_t(), pa.leading_coeff().get_mpz_t(), pb.leading_coeff().get_mpz_t());
  int best_deg = -1;
  std::vector<mpz_class> crt;  // symmetric residues accumulated so far
  mpz_class crt_mod = 1;
  mpz_class tmp, half;
  for (u64 p : kGcdPrimes) {
    if (mpz_fdiv_ui(pa.leading_coeff().get_mpz_t(), p) == 0) continue;
    if (mpz_fdiv_ui(pb.leading_coeff().get_mpz_t(), p) == 0) continue;
    auto to_mod = [&](const IntPoly& poly) {
      std::vector<u64> img(poly.degree() + 1);
      for (int e = 0; e <= poly.degree(); ++e) {
        u64 r = mpz_fdiv_ui(poly.coeff(e).get_mpz_t(), p);
        img[e] = r;
      }
      return img;
    };
    std::vector<u64> g = gcd_mod_p(to_mod(pa), to_mod(pb), p);
    const int deg = static_cast<int>(g.size()) - 1;
    if (deg <= 0) return monomial(cg, val);  // coprime primitive parts
    if (best_deg == -1 || deg < best_deg) {
      // First usable prime, or every earlier prime was unlucky.
      best_deg = deg;
      crt.assign(deg + 1, 0);
      crt_mod = 1;
    } else if (deg > best_deg) {
      continue;  // this prime is unlucky
    }
    // Scale to leading coefficient lcg and fold into the CRT residues.
    const u64 scale = mpz_fdiv_ui(lcg.get_mpz_t(), p);
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class inv_mod;  // crt_mod^{-1} mod p
    tmp = crt_mod % pz;
    u64 crt_mod_p = mpz_get_ui(tmp.get_mpz_t());
    u64 crt_inv = mod_inv(crt_mod_p, p);
    mpz_class new_mod = crt_mod * pz;
    half = new_mod / 2;
    bool changed = false;
    for (int e = 0; e <= best_deg; ++e) {
      u64 ge = mod_mul(g[e], scale, p);
      // delta = (ge - crt[e]) * crt_inv mod p
      tmp = crt[e] % pz;
      if (tmp < 0) tmp += pz;
      u64 cur = mpz_get_ui(tmp.get_mpz_t());
      u64 delta = ge >= cur ? ge - cur : ge + p - cur;
      delta = mod_mul(delta, crt_inv, p);
      if (delta != 0) {
        crt[e] += crt_mod * mpz_class(static_cast<unsigned long>(delta));
        changed = true;
      }
      // keep residues symmetric around zero
      if (crt[e] > half) crt[e] -= new_mod;
      if (crt[e] < -half) crt[e] += new_mod;
    }
    crt_mod = new_mod;
    if (changed && crt_mod != pz) continue;  // not yet stable, take another prime
    IntPoly candidate;
    for (int e = 0; e <= best_deg; ++e) candidate.set_coeff(e, crt[e]);
    candidate = candidate.primitive_part();
    if (try_divide(pa, candidate) && try_divide(pb, candidate))
      return candidate.mul_monomial(cg, val);
  }
  return gcd_prs(std::move(pa), std::move(pb)).mul_monomial(cg, val);
}

mpq_class IntPoly::eval(const mpq_class& point) const {
  // Horner from the top coefficient down.
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= point;
    if (coeffs_[i] != 0) acc += coeffs_[i];
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const mpz_class& c = coeffs_[e];
    if (c == 0) continue;
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << abs_c.get_str();
    } else {
      if (abs_c != 1) out << abs_c.get_str() << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

QRational::QRational(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRational: zero denominator");
  canonicalize();
}

QRational QRational::q_pow(int k) {
  QRational r;
  if (k >= 0) {
    r.num_ = IntPoly::monomial(1, k);
    r.den_ = IntPoly(1);
  } else {
    r.num_ = IntPoly(1);
    r.den_ = IntPoly::monomial(1, -k);
  }
  return r;
}

void QRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRational QRational::operator-() const {
  QRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QRational QRational::operator+(const QRational& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  QRational r;
  if (den_ == other.den_) {
    // t/(b) with gcd(t, b) = gcd(t, b); cancel once.
    r.num_ = num_ + other.num_;
    r.den_ = den_;
    if (r.num_.is_zero()) {
      r.den_ = IntPoly(1);
      return r;
    }
    IntPoly g = IntPoly::gcd(r.num_, r.den_);
    if (!g.is_one()) {
      r.num_ = r.num_.divided_exact(g);
      r.den_ = r.den_.divided_exact(g);
    }
    return r;
  }
  // Henrici: with g = gcd(b, d), t = a(d/g) + c(b/g), h = gcd(t, g):
  // a/b + c/d = (t/h) / ((b/g)(d/h)), already in lowest terms.
  IntPoly g = IntPoly::gcd(den_, other.den_);
  if (g.is_one()) {
    r.num_ = num_ * other.den_ + other.num_ * den_;
    if (r.num_.is_zero()) {
      r.den_ = IntPoly(1);
      return r;
    }
    r.den_ = den_ * other.den_;
    return r;
  }
  IntPoly dg = other.den_.divided_exact(g);
  IntPoly bg = den_.divided_exact(g);
  IntPoly t = num_ * dg + other.num_ * bg;
  if (t.is_zero()) {
    r.num_ = IntPoly();
    r.den_ = IntPoly(1);
    return r;
  }
  IntPoly h = IntPoly::gcd(t, g);
  if (h.is_one()) {
    r.num_ = std::move(t);
    r.den_ = bg * other.den_;
  } else {
    r.num_ = t.divided_exact(h);
    r.den_ = bg * other.den_.divided_exact(h);
  }
  return r;
}

QRational QRational::operator-(const QRational& other) const { return *this + (-other); }

QRational QRational::operator*(const QRational& other) const {
  QRational r;
  if (is_zero() || other.is_zero()) return r;
  // Cross-cancel so that no gcd of large products is ever needed.
  IntPoly g1 = IntPoly::gcd(num_, other.den_);
  IntPoly g2 = IntPoly::gcd(other.num_, den_);
  const IntPoly a = g1.is_one() ? num_ : num_.divided_exact(g1);
  const IntPoly d = g1.is_one() ? other.den_ : other.den_.divided_exact(g1);
  const IntPoly c = g2.is_one() ? other.num_ : other.num_.divided_exact(g2);
  const IntPoly b = g2.is_one() ? den_ : den_.divided_exact(g2);
  r.num_ = a * c;
  r.den_ = b * d;
  return r;
}

QRational QRational::operator/(const QRational& other) const { return *this * other.inv(); }

QRational QRational::inv() const {
  if (is_zero()) throw std::domain_error("QRational: division by zero");
  QRational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QRational QRational::pow(int k) const {
  if (k == 0) return QRational(1);
  QRational base = k > 0 ? *this : inv();
  int e = k > 0 ? k : -k;
  QRational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

mpq_class QRational::eval_at(const mpq_class& point) const {
  mpq_class d = den_.eval(point);
  if (d == 0) throw pole_error("QRational: pole at evaluation point");
  return num_.eval(point) / d;
}

std::string QRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::ostringstream out;
  bool pn = num_.term_count() > 1;
  bool pd = den_.term_count() > 1;
  out << (pn ? "(" : "") << num_.to_string() << (pn ? ")" : "") << "/" << (pd ? "(" : "")
      << den_.to_string() << (pd ? ")" : "");
  return out.str();
}

std::string QRational::to_latex() const {
  if (den_.is_one()) return num_.to_string();
  return "\\frac{" + num_.to_string() + "}{" + den_.to_string() + "}";
}

}  // namespace qhaar
