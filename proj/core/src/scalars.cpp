#include "hlift/scalars.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hlift {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// Division with remainder; the divisor need not be monic.
void poly_divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  trim(rem);
  quot.clear();
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  const size_t dd = den.size() - 1;
  const mpq_class& lead = den.back();
  if (rem.size() > dd) quot.assign(rem.size() - dd, mpq_class(0));
  while (rem.size() >= den.size() && !rem.empty()) {
    mpq_class f = rem.back() / lead;
    size_t shift = rem.size() - den.size();
    quot[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= f * den[i];
    trim(rem);
  }
  trim(quot);
}

Poly poly_mod(const Poly& num, const Poly& den) {
  Poly q, r;
  poly_divmod(num, den, q, r);
  return r;
}

// Extended Euclid: returns g with g = u*a + v*b, g monic nonzero gcd.
void poly_ext_gcd(Poly a, Poly b, Poly& g, Poly& u, Poly& v) {
  Poly u0 = {mpq_class(1)}, v0 = {};
  Poly u1 = {}, v1 = {mpq_class(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    Poly u2 = u0, v2 = v0;
    Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
    u2.resize(std::max(u2.size(), qu.size()), mpq_class(0));
    v2.resize(std::max(v2.size(), qv.size()), mpq_class(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
    trim(u2);
    trim(v2);
    a = b;
    u0 = u1;
    v0 = v1;
    b = r;
    u1 = u2;
    v1 = v2;
  }
  g = a;
  u = u0;
  v = v0;
  if (g.empty()) throw std::domain_error("gcd of zero polynomials");
  mpq_class lead = g.back();
  for (auto& c : g) c /= lead;
  for (auto& c : u) c /= lead;
  for (auto& c : v) c /= lead;
}

const Poly& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::function<const Poly&(unsigned)> get = [&](unsigned m) -> const Poly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    Poly f(m + 1, mpq_class(0));
    f[0] = -1;
    f[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      Poly q, r;
      poly_divmod(f, get(d), q, r);
      if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
      f = q;
    }
    return cache.emplace(m, std::move(f)).first->second;
  };
  return get(n);
}

mpz_class mod_pow(mpz_class base, mpz_class exp, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

FieldSpec FieldSpec::cyclotomic(unsigned n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  FieldSpec s;
  s.kind_ = FieldKind::cyclotomic;
  s.n_ = n;
  auto d = std::make_shared<Data>();
  d->phi = cyclotomic_polynomial(n);
  s.degree_ = static_cast<unsigned>(d->phi.size() - 1);
  s.d_ = std::move(d);
  return s;
}

FieldSpec FieldSpec::prime(const mpz_class& p, unsigned n, const mpz_class& omega) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("modulus is not prime");
  if (n < 1) throw std::invalid_argument("root order must be >= 1");
  mpz_class pm1 = p - 1;
  if (pm1 % n != 0) throw std::invalid_argument("root order must divide p-1");
  mpz_class w = omega % p;
  if (w < 0) w += p;
  if (w == 0) throw std::invalid_argument("omega must be nonzero");
  if (mod_pow(w, n, p) != 1) throw std::invalid_argument("omega^n != 1");
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0 && mod_pow(w, d, p) == 1)
      throw std::invalid_argument("omega has order smaller than n");
  FieldSpec s;
  s.kind_ = FieldKind::prime;
  s.n_ = n;
  s.degree_ = 1;
  auto data = std::make_shared<Data>();
  data->p = p;
  data->omega = w;
  s.d_ = std::move(data);
  return s;
}

const mpz_class& FieldSpec::modulus() const {
  if (kind_ != FieldKind::prime) throw std::logic_error("not a prime field");
  return d_->p;
}

const mpz_class& FieldSpec::omega_residue() const {
  if (kind_ != FieldKind::prime) throw std::logic_error("not a prime field");
  return d_->omega;
}

const std::vector<mpq_class>& FieldSpec::minimal_polynomial() const {
  if (kind_ != FieldKind::cyclotomic) throw std::logic_error("not a cyclotomic field");
  return d_->phi;
}

mpz_class FieldSpec::characteristic() const {
  return kind_ == FieldKind::prime ? d_->p : mpz_class(0);
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (kind_ != o.kind_ || n_ != o.n_) return false;
  if (kind_ == FieldKind::prime) return d_->p == o.d_->p && d_->omega == o.d_->omega;
  return true;
}

std::string FieldSpec::description() const {
  if (kind_ == FieldKind::cyclotomic) return "Q(w), w primitive " + std::to_string(n_) + "-th root of unity";
  return "F_" + d_->p.get_str() + ", omega=" + d_->omega.get_str() + " of order " + std::to_string(n_);
}

// ---------------------------------------------------------------------------

static void check_same_spec(const Scalar& a, const Scalar& b) {
  if (a.spec() != b.spec()) throw std::invalid_argument("FieldSpec mismatch");
}

void Scalar::reduce_cyclotomic(std::vector<mpq_class> raw) {
  const auto& phi = spec_.minimal_polynomial();
  Poly r = poly_mod(raw, phi);
  r.resize(spec_.degree(), mpq_class(0));
  c_ = std::move(r);
}

Scalar Scalar::zero(const FieldSpec& spec) {
  Scalar s(spec);
  if (spec.kind() == FieldKind::cyclotomic)
    s.c_.assign(spec.degree(), mpq_class(0));
  else
    s.r_ = 0;
  return s;
}

Scalar Scalar::one(const FieldSpec& spec) { return from_integer(spec, 1); }

Scalar Scalar::omega(const FieldSpec& spec) {
  Scalar s(spec);
  if (spec.kind() == FieldKind::cyclotomic) {
    Poly w = {mpq_class(0), mpq_class(1)};
    s.reduce_cyclotomic(std::move(w));
  } else {
    s.r_ = spec.omega_residue();
  }
  return s;
}

Scalar Scalar::from_integer(const FieldSpec& spec, long v) {
  return from_integer(spec, mpz_class(v));
}

Scalar Scalar::from_integer(const FieldSpec& spec, const mpz_class& v) {
  Scalar s(spec);
  if (spec.kind() == FieldKind::cyclotomic) {
    s.c_.assign(spec.degree(), mpq_class(0));
    if (spec.degree() > 0) s.c_[0] = mpq_class(v);
    if (spec.degree() == 0) throw std::logic_error("degenerate field");
  } else {
    s.r_ = v % spec.modulus();
    if (s.r_ < 0) s.r_ += spec.modulus();
  }
  return s;
}

Scalar Scalar::from_rational(const FieldSpec& spec, const mpq_class& v) {
  Scalar s(spec);
  if (spec.kind() == FieldKind::cyclotomic) {
    s.c_.assign(spec.degree(), mpq_class(0));
    s.c_[0] = v;
  } else {
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), spec.modulus().get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod p");
    s.r_ = (num * deninv) % spec.modulus();
    if (s.r_ < 0) s.r_ += spec.modulus();
  }
  return s;
}

bool Scalar::is_zero() const {
  if (spec_.kind() == FieldKind::cyclotomic) {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }
  return r_ == 0;
}

bool Scalar::is_one() const { return *this == one(spec_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_spec(*this, o);
  Scalar s(spec_);
  if (spec_.kind() == FieldKind::cyclotomic) {
    s.c_ = c_;
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
  } else {
    s.r_ = (r_ + o.r_) % spec_.modulus();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_spec(*this, o);
  Scalar s(spec_);
  if (spec_.kind() == FieldKind::cyclotomic) {
    s.c_ = c_;
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i] -= o.c_[i];
  } else {
    s.r_ = (r_ - o.r_ + spec_.modulus()) % spec_.modulus();
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_spec(*this, o);
  Scalar s(spec_);
  if (spec_.kind() == FieldKind::cyclotomic) {
    s.reduce_cyclotomic(poly_mul(c_, o.c_));
  } else {
    s.r_ = (r_ * o.r_) % spec_.modulus();
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s(spec_);
  if (spec_.kind() == FieldKind::cyclotomic) {
    Poly g, u, v, a = c_;
    trim(a);
    poly_ext_gcd(a, spec_.minimal_polynomial(), g, u, v);
    if (g.size() != 1) throw std::logic_error("element not invertible in Q(w)");
    // g == 1, so u * a == 1 mod Phi_n.
    s.reduce_cyclotomic(std::move(u));
  } else {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), r_.get_mpz_t(), spec_.modulus().get_mpz_t()) == 0)
      throw std::domain_error("division by zero");
    s.r_ = inv;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return zero(spec_) - *this; }

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(spec_);
  Scalar b = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  if (spec_.kind() == FieldKind::cyclotomic) return c_ == o.c_;
  return r_ == o.r_;
}

std::string Scalar::str() const {
  if (spec_.kind() == FieldKind::prime)
    return spec_.modulus().get_str() + ":" + r_.get_str();
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    mpq_class a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    std::string term;
    if (k == 0) {
      term = a.get_str();
    } else {
      std::string wpart = (k == 1) ? "w" : "w^" + std::to_string(k);
      term = (a == 1) ? wpart : a.get_str() + "*" + wpart;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& text) : s(text) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected integer in scalar text");
    return mpz_class(s.substr(start, i - start));
  }
};

}  // namespace

Scalar Scalar::parse(const FieldSpec& spec, const std::string& text) {
  if (spec.kind() == FieldKind::prime) {
    Parser p(text);
    mpz_class mod = p.integer();
    if (!p.eat(':')) throw std::invalid_argument("prime scalar text must be p:residue");
    mpz_class r = p.integer();
    p.skip_ws();
    if (p.i != text.size()) throw std::invalid_argument("trailing characters in scalar text");
    if (mod != spec.modulus()) throw std::invalid_argument("modulus does not match FieldSpec");
    return from_integer(spec, r);
  }
  Parser p(text);
  Scalar acc = zero(spec);
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.i == text.size()) {
      if (first) throw std::invalid_argument("empty scalar text");
      break;
    }
    int sign = 1;
    if (p.eat('-'))
      sign = -1;
    else if (p.eat('+')) {
      if (first) throw std::invalid_argument("leading + in scalar text");
    } else if (!first) {
      throw std::invalid_argument("expected + or - between scalar terms");
    }
    first = false;
    p.skip_ws();
    mpq_class coef(1);
    bool have_coef = false;
    if (p.i < text.size() && std::isdigit(static_cast<unsigned char>(text[p.i]))) {
      mpz_class num = p.integer();
      mpz_class den(1);
      if (p.eat('/')) den = p.integer();
      coef = mpq_class(num, den);
      coef.canonicalize();
      have_coef = true;
    }
    unsigned power = 0;
    bool have_w = false;
    size_t save = p.i;
    bool star = p.eat('*');
    p.skip_ws();
    if (p.i < text.size() && text[p.i] == 'w') {
      ++p.i;
      have_w = true;
      power = 1;
      if (p.eat('^')) power = static_cast<unsigned>(p.integer().get_ui());
    } else if (star) {
      throw std::invalid_argument("expected w after *");
    } else {
      p.i = save;
    }
    if (!have_coef && !have_w) throw std::invalid_argument("malformed scalar term");
    if (sign < 0) coef = -coef;
    Scalar term = from_rational(spec, coef);
    if (have_w) term = term * omega(spec).pow(power);
    acc = acc + term;
  }
  return acc;
}

Scalar omega_integer(unsigned a, const FieldSpec& spec) {
  Scalar s = Scalar::zero(spec);
  Scalar w = Scalar::omega(spec);
  Scalar p = Scalar::one(spec);
  for (unsigned i = 0; i < a; ++i) {
    s = s + p;
    p = p * w;
  }
  return s;
}

Scalar omega_binomial(unsigned b, unsigned c, const FieldSpec& spec) {
  if (c > b) throw std::invalid_argument("omega_binomial requires c <= b");
  Scalar w = Scalar::omega(spec);
  // One row of the Pascal triangle at a time.
  std::vector<Scalar> row(1, Scalar::one(spec));
  for (unsigned r = 1; r <= b; ++r) {
    std::vector<Scalar> next(r + 1, Scalar::one(spec));
    for (unsigned k = 1; k < r; ++k)
      next[k] = row[k - 1] + w.pow(k) * row[k];
    row = std::move(next);
  }
  return row[c];
}

Scalar omega_binomial_quotient(unsigned b, unsigned c, const FieldSpec& spec) {
  if (c > b) throw std::invalid_argument("omega_binomial requires c <= b");
  Scalar num = Scalar::one(spec);
  Scalar den = Scalar::one(spec);
  for (unsigned i = 0; i < c; ++i) {
    num = num * omega_integer(b - i, spec);
    Scalar f = omega_integer(c - i, spec);
    if (f.is_zero()) throw std::domain_error("omega-integer denominator vanishes");
    den = den * f;
  }
  return num / den;
}

}  // namespace hlift
