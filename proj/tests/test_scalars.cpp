#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hlift/scalars.hpp"

using namespace hlift;

namespace {

// Independent oracle: plain polynomial multiplication followed by manual
// reduction mod Phi_3 = w^2 + w + 1, written without the Scalar class.
std::vector<mpq_class> mul_mod_phi3(const std::vector<mpq_class>& a,
                                    const std::vector<mpq_class>& b) {
  std::vector<mpq_class> raw(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) raw[i + j] += a[i] * b[j];
  // w^2 = -w - 1, w^3 = 1: reduce from the top.
  while (raw.size() > 2) {
    size_t k = raw.size() - 1;
    mpq_class c = raw[k];
    raw.pop_back();
    raw[k - 1] -= c;
    raw[k - 2] -= c;
  }
  raw.resize(2, mpq_class(0));
  return raw;
}

Scalar random_scalar(const FieldSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  if (spec.kind() == FieldKind::prime) {
    return Scalar::from_integer(spec, num(rng));
  }
  Scalar s = Scalar::zero(spec);
  Scalar w = Scalar::omega(spec);
  Scalar p = Scalar::one(spec);
  for (unsigned i = 0; i < spec.degree(); ++i) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    s = s + Scalar::from_rational(spec, c) * p;
    p = p * w;
  }
  return s;
}

}  // namespace

TEST_CASE("omega has order n and field axioms hold") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 12u}) {
    FieldSpec spec = FieldSpec::cyclotomic(n);
    Scalar w = Scalar::omega(spec);
    CHECK(w.pow(n).is_one());
    for (unsigned d = 1; d < n; ++d) CHECK_FALSE(w.pow(d).is_one());
    CHECK((w * w.pow(static_cast<long>(n) - 1)).is_one());
    Scalar a = Scalar::from_integer(spec, 5);
    CHECK(a + Scalar::zero(spec) == a);
  }
}

TEST_CASE("cyclotomic product matches direct reduction oracle, n=3") {
  FieldSpec spec = FieldSpec::cyclotomic(3);
  Scalar w = Scalar::omega(spec);
  Scalar lhs = (Scalar::one(spec) + w) * (Scalar::one(spec) + w * w);
  auto w2 = mul_mod_phi3({0, 1}, {0, 1});
  std::vector<mpq_class> one_plus_w2 = {1 + w2[0], w2[1]};
  auto prod = mul_mod_phi3({1, 1}, one_plus_w2);
  CHECK(lhs.coefficients()[0] == prod[0]);
  CHECK(lhs.coefficients()[1] == prod[1]);
}

TEST_CASE("random arithmetic identities in Q(w)") {
  std::mt19937_64 rng(7);
  for (unsigned n : {3u, 4u, 5u}) {
    FieldSpec spec = FieldSpec::cyclotomic(n);
    for (int trial = 0; trial < 30; ++trial) {
      Scalar a = random_scalar(spec, rng);
      Scalar b = random_scalar(spec, rng);
      Scalar c = random_scalar(spec, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
      if (!b.is_zero()) CHECK(a / b * b == a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("prime field spec validation and arithmetic") {
  FieldSpec f7 = FieldSpec::prime(7, 3, 2);  // 2 has order 3 mod 7
  Scalar w = Scalar::omega(f7);
  CHECK(w.pow(3).is_one());
  CHECK_FALSE(w.pow(1).is_one());
  CHECK((Scalar::from_integer(f7, 3) / Scalar::from_integer(f7, 5) *
         Scalar::from_integer(f7, 5)) == Scalar::from_integer(f7, 3));
  CHECK_THROWS_AS(FieldSpec::prime(7, 3, 3), std::invalid_argument);   // order 6
  CHECK_THROWS_AS(FieldSpec::prime(7, 4, 2), std::invalid_argument);   // 4 does not divide 6
  CHECK_THROWS_AS(FieldSpec::prime(8, 1, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(Scalar::from_integer(f7, 0).inverse(), std::domain_error);
}

TEST_CASE("spec mismatch is rejected") {
  FieldSpec a = FieldSpec::cyclotomic(3);
  FieldSpec b = FieldSpec::cyclotomic(4);
  CHECK_THROWS_AS(Scalar::one(a) + Scalar::one(b), std::invalid_argument);
}

TEST_CASE("omega integers") {
  FieldSpec spec = FieldSpec::cyclotomic(3);
  CHECK(omega_integer(0, spec).is_zero());
  CHECK(omega_integer(1, spec).is_one());
  CHECK(omega_integer(3, spec).is_zero());
  CHECK(omega_integer(2, spec) == Scalar::one(spec) + Scalar::omega(spec));
  for (unsigned n : {2u, 3u, 5u}) {
    FieldSpec s = FieldSpec::cyclotomic(n);
    CHECK(omega_integer(n, s).is_zero());
  }
}

TEST_CASE("omega integer splitting (a+b)_w = (a)_w + w^a (b)_w") {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    FieldSpec spec = FieldSpec::cyclotomic(n);
    Scalar w = Scalar::omega(spec);
    for (unsigned a = 0; a <= 2 * n; ++a)
      for (unsigned b = 0; a + b <= 2 * n; ++b)
        CHECK(omega_integer(a + b, spec) ==
              omega_integer(a, spec) + w.pow(a) * omega_integer(b, spec));
  }
}

TEST_CASE("omega binomial recurrence vs quotient formula") {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    FieldSpec spec = FieldSpec::cyclotomic(n);
    for (unsigned b = 0; b <= n - 1; ++b)
      for (unsigned c = 0; c <= b; ++c) {
        CHECK(omega_binomial(b, 0, spec).is_one());
        CHECK(omega_binomial(b, b, spec).is_one());
        Scalar viaRec = omega_binomial(b, c, spec);
        bool valid = true;
        for (unsigned i = 0; i < c; ++i)
          if (omega_integer(c - i, spec).is_zero()) valid = false;
        if (valid) CHECK(viaRec == omega_binomial_quotient(b, c, spec));
      }
  }
  FieldSpec s3 = FieldSpec::cyclotomic(3);
  CHECK(omega_binomial(2, 1, s3) == Scalar::one(s3) + Scalar::omega(s3));
  // Full row b = n-1 = 3 over Q(i).
  FieldSpec s4 = FieldSpec::cyclotomic(4);
  for (unsigned c = 0; c <= 3; ++c)
    CHECK(omega_binomial(3, c, s4) == omega_binomial_quotient(3, c, s4));
  CHECK_THROWS_AS(omega_binomial(2, 3, s4), std::invalid_argument);
}

TEST_CASE("binomial row asymmetry for n >= 3") {
  for (unsigned n : {3u, 4u, 5u}) {
    FieldSpec spec = FieldSpec::cyclotomic(n);
    bool some_diff = false;
    for (unsigned a = 0; a + 1 <= n - 1; ++a)
      if (omega_binomial(n - 1, a + 1, spec) != omega_binomial(n - 1, a, spec))
        some_diff = true;
    CHECK(some_diff);
  }
}

TEST_CASE("text form round trip") {
  std::mt19937_64 rng(11);
  for (unsigned n : {1u, 2u, 3u, 5u, 8u}) {
    FieldSpec spec = FieldSpec::cyclotomic(n);
    for (int t = 0; t < 40; ++t) {
      Scalar s = random_scalar(spec, rng);
      CHECK(Scalar::parse(spec, s.str()) == s);
    }
  }
  FieldSpec f13 = FieldSpec::prime(13, 4, 5);
  for (int t = 0; t < 13; ++t) {
    Scalar s = Scalar::from_integer(f13, t);
    CHECK(Scalar::parse(f13, s.str()) == s);
  }
  FieldSpec s3 = FieldSpec::cyclotomic(3);
  CHECK(Scalar::parse(s3, "1 + 2*w") == Scalar::one(s3) + Scalar::from_integer(s3, 2) * Scalar::omega(s3));
  CHECK(Scalar::parse(s3, "-w") == -Scalar::omega(s3));
  CHECK_THROWS_AS(Scalar::parse(s3, "1 + + w"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(s3, ""), std::invalid_argument);
}
