#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace hlift {

enum class FieldKind { cyclotomic, prime };

/// Ground field with a designated root of unity: either Q(w), with w the
/// class of the indeterminate modulo the n-th cyclotomic polynomial, or
/// F_p with a chosen residue omega of multiplicative order exactly n.
class FieldSpec {
 public:
  static FieldSpec cyclotomic(unsigned n);
  static FieldSpec prime(const mpz_class& p, unsigned n, const mpz_class& omega);

  FieldKind kind() const { return kind_; }
  /// Order of the designated root of unity.
  unsigned order() const { return n_; }
  const mpz_class& modulus() const;
  const mpz_class& omega_residue() const;
  /// Degree of the representation: deg Phi_n over Q, or 1 over F_p.
  unsigned degree() const { return degree_; }
  /// Phi_n as a monic coefficient vector (cyclotomic kind only).
  const std::vector<mpq_class>& minimal_polynomial() const;
  mpz_class characteristic() const;

  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string description() const;

 private:
  FieldSpec() = default;
  struct Data {
    mpz_class p;
    mpz_class omega;
    std::vector<mpq_class> phi;  // monic, degree phi.size()-1
  };
  FieldKind kind_ = FieldKind::cyclotomic;
  unsigned n_ = 1;
  unsigned degree_ = 1;
  std::shared_ptr<const Data> d_;
};

/// Exact field element. Cyclotomic scalars are reduced polynomials in w
/// with rational coefficients (always of length spec().degree(), dense);
/// prime scalars are residues in [0, p). Values are immutable and safe to
/// share across threads.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar omega(const FieldSpec& spec);
  static Scalar from_integer(const FieldSpec& spec, long v);
  static Scalar from_integer(const FieldSpec& spec, const mpz_class& v);
  static Scalar from_rational(const FieldSpec& spec, const mpq_class& v);
  /// Parses the text form produced by str(): a polynomial in `w` such as
  /// `1 + 2*w - 1/2*w^2`, or `p:residue` for prime fields.
  static Scalar parse(const FieldSpec& spec, const std::string& text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  const std::vector<mpq_class>& coefficients() const { return c_; }
  const mpz_class& residue() const { return r_; }

 private:
  explicit Scalar(const FieldSpec& spec) : spec_(spec) {}
  void reduce_cyclotomic(std::vector<mpq_class> raw);

  FieldSpec spec_;
  std::vector<mpq_class> c_;  // cyclotomic kind
  mpz_class r_;               // prime kind
};

/// (a)_w = 1 + w + w^2 + ... + w^{a-1}, with (0)_w = 0.
Scalar omega_integer(unsigned a, const FieldSpec& spec);

/// Gaussian binomial via the Pascal-type recurrence
///   binom(b,c) = binom(b-1,c-1) + w^c binom(b-1,c),
/// which stays defined when intermediate w-integers vanish.
Scalar omega_binomial(unsigned b, unsigned c, const FieldSpec& spec);

/// Gaussian binomial via the quotient of w-integers. Throws
/// std::domain_error when a denominator factor vanishes; used as an
/// independent cross-check of omega_binomial on its domain of validity.
Scalar omega_binomial_quotient(unsigned b, unsigned c, const FieldSpec& spec);

}  // namespace hlift
