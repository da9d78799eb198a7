#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "saturate/error.hpp"
#include "saturate/frobenius.hpp"

using saturate::Error;
using saturate::ErrorKind;
using namespace saturate::frobenius;
using saturate::ff::Field;
using saturate::matgrp::SquareMatrix;
using saturate::testing::rng;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::MalformedInput;
}

ExactPolynomial weil_quadratic(std::int64_t a, std::int64_t q) { return ExactPolynomial::from_ints({q, -a, 1}); }

std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Monic polynomial over Q with Z[1/p] coefficients and constant term
// +-p^m, optionally spoiled by a factor r.
ExactPolynomial random_plain_like(std::uint64_t p, std::int64_t spoil) {
  const int n = static_cast<int>(uniform(1, 4));
  std::vector<Rational> c(n + 1);
  for (int i = 1; i < n; ++i) {
    Integer den = 1;
    for (auto j = uniform(0, 2); j > 0; --j) den *= p;
    c[i] = Rational(uniform(-9, 9)) / Rational(den);
  }
  Rational c0 = 1;
  const auto m = uniform(-2, 3);
  for (auto j = m; j > 0; --j) c0 *= p;
  for (auto j = m; j < 0; ++j) c0 /= p;
  if (uniform(0, 1)) c0 = -c0;
  c[0] = c0 * spoil;
  c[n] = 1;
  return ExactPolynomial::over_rationals(c);
}

NumberField qsqrt(std::int64_t d) { return NumberField::from_minpoly({-d, 0, 1}); }

}  // namespace

// ---- plainness over Q ------------------------------------------------------

TEST(Plain, Examples) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    EXPECT_TRUE(is_plain_rational(ExactPolynomial::from_ints({-static_cast<std::int64_t>(p), 1}), p));
    EXPECT_TRUE(is_plain_rational(ExactPolynomial::from_ints({-1, 1}), p));
    for (std::int64_t a = -10; a <= 10; ++a) EXPECT_TRUE(is_plain_rational(weil_quadratic(a, p), p));
  }
  EXPECT_FALSE(is_plain_rational(ExactPolynomial::from_ints({-3, 1}), 5));
  EXPECT_FALSE(is_plain_rational(ExactPolynomial::from_ints({0, 1}), 5));
  // 1/25 is a unit of Z[1/5]; 1/3 is not even in it.
  EXPECT_TRUE(is_plain_rational(ExactPolynomial::over_rationals({Rational(1, 25), Rational(2, 5), 1}), 5));
  EXPECT_FALSE(is_plain_rational(ExactPolynomial::over_rationals({1, Rational(1, 3), 1}), 5));
}

TEST(Plain, Errors) {
  EXPECT_EQ(kind_of([] { is_plain_rational(ExactPolynomial::from_ints({1, 2}), 5); }), ErrorKind::NotMonic);
  const NumberField k = qsqrt(2);
  const ExactPolynomial p(k, {k.one(), k.one()});
  EXPECT_EQ(kind_of([&] { is_plain_rational(p, 5); }), ErrorKind::WrongField);
  EXPECT_EQ(kind_of([] { NumberField::from_minpoly({1, -2, 1}); }), ErrorKind::DegenerateField);
  EXPECT_EQ(kind_of([] { NumberField::from_minpoly({1, 2}); }), ErrorKind::DegenerateField);
  EXPECT_EQ(kind_of([] { ExactPolynomial::from_ints({0, 0}); }), ErrorKind::MalformedInput);
}

TEST(Plain, MultiplicativeProperty) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = trial % 2 ? 5 : 3;
    const auto a = random_plain_like(p, uniform(0, 2) ? 1 : 7);
    const auto b = random_plain_like(p, uniform(0, 2) ? 1 : 11);
    ASSERT_EQ(is_plain_rational(a * b, p), is_plain_rational(a, p) && is_plain_rational(b, p));
  }
}

TEST(Plain, ReversalInvariance) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_plain_like(5, uniform(0, 1) ? 1 : 7);
    ASSERT_EQ(is_plain_rational(reversed_monic(a), 5), is_plain_rational(a, 5));
    ASSERT_TRUE(reversed_monic(reversed_monic(a)) == a);
  }
}

// ---- number fields ---------------------------------------------------------

TEST(NumberFieldArith, QuadraticNormAndTrace) {
  for (std::int64_t d : {2, -1, 3, -7}) {
    const NumberField k = qsqrt(d);
    for (int trial = 0; trial < 50; ++trial) {
      const Rational a(uniform(-20, 20), uniform(1, 4));
      const Rational b(uniform(-20, 20), uniform(1, 4));
      const Coeff x{a, b};
      EXPECT_EQ(k.norm(x), a * a - Rational(d) * b * b);
      const auto cp = k.charpoly(x);
      EXPECT_EQ(cp[2], Rational(1));
      EXPECT_EQ(cp[1], -2 * a);
      EXPECT_EQ(cp[0], k.norm(x));
      if (!k.is_zero(x)) EXPECT_EQ(k.mul(x, k.inv(x)), k.one());
    }
  }
}

TEST(NumberFieldArith, CubicNorm) {
  // Q(cbrt 2): N(a + b t + c t^2) = a^3 + 2 b^3 + 4 c^3 - 6 a b c.
  const NumberField k = NumberField::from_minpoly({-2, 0, 0, 1});
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a(uniform(-9, 9)), b(uniform(-9, 9)), c(uniform(-9, 9), uniform(1, 3));
    EXPECT_EQ(k.norm({a, b, c}), a * a * a + 2 * b * b * b + 4 * c * c * c - 6 * a * b * c);
    const Coeff x{a, b, c};
    const Coeff y{Rational(uniform(-5, 5)), Rational(uniform(-5, 5)), Rational(uniform(-5, 5))};
    EXPECT_EQ(k.norm(k.mul(x, y)), k.norm(x) * k.norm(y));
  }
  EXPECT_EQ(k.embeddings().size(), 3U);
}

TEST(NumberFieldArith, ZeroDivisorIsDegenerate) {
  // x^2 - 1 is squarefree but reducible; x - 1 is a zero divisor.
  const NumberField k = NumberField::from_minpoly({-1, 0, 1});
  EXPECT_EQ(kind_of([&] { k.inv({-1, 1}); }), ErrorKind::DegenerateField);
}

TEST(PlainNumberField, Examples) {
  for (std::int64_t p : {3, 5, 7}) {
    const NumberField k = qsqrt(2);
    // N(sqrt2 p) = -2 p^2.
    EXPECT_EQ(k.norm({0, Rational(p)}), Rational(-2 * p * p));
    const ExactPolynomial bad(k, {{0, Rational(p)}, k.one()});
    const auto r = plain_necessary_numberfield(bad, p);
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.witness.find("norm"), std::string::npos);
    EXPECT_TRUE(plain_necessary_numberfield(ExactPolynomial(k, {k.from_rational(-p), k.one()}), p).pass);
    EXPECT_TRUE(plain_necessary_numberfield(ExactPolynomial(k, {k.one(), {0, 3}, k.one()}), p).pass);
  }
  // sqrt2 / 2 has characteristic polynomial T^2 - 1/2: not integral over Z[1/5].
  const NumberField k = qsqrt(2);
  const auto r = plain_necessary_numberfield(ExactPolynomial(k, {k.one(), {0, Rational(1, 2)}, k.one()}), 5);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("integral"), std::string::npos);
  EXPECT_TRUE(plain_necessary_numberfield(ExactPolynomial(k, {k.one(), {0, Rational(1, 2)}, k.one()}), 2).pass);
  EXPECT_EQ(kind_of([&] { plain_necessary_numberfield(ExactPolynomial(k, {k.one(), {0, 1}}), 5); }),
            ErrorKind::NotMonic);
}

TEST(PlainNumberField, AgreesWithExactOverRationals) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_plain_like(5, uniform(0, 1) ? 1 : 3);
    ASSERT_EQ(plain_necessary_numberfield(a, 5).pass, is_plain_rational(a, 5));
  }
}

// ---- root isolation --------------------------------------------------------

TEST(Roots, UnitRoots) {
  using saturate::roots::Complex;
  using saturate::roots::Real;
  for (int n = 1; n <= 12; ++n) {
    std::vector<Complex> c(n + 1, Complex(0));
    c[0] = Complex(-1);
    c[n] = Complex(1);
    const auto disks = saturate::roots::isolate_roots(c);
    ASSERT_EQ(disks.size(), static_cast<std::size_t>(n));
    for (const auto& d : disks) {
      EXPECT_LT(static_cast<double>(abs(Real(abs(d.center)) - 1)), 1e-40);
      EXPECT_LT(static_cast<double>(d.radius), 1e-40);
    }
  }
}

TEST(Roots, ReconstructCoefficients) {
  using saturate::roots::Complex;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(uniform(2, 8));
    std::vector<Complex> c(n + 1);
    for (auto& x : c) x = Complex(static_cast<double>(uniform(-20, 20)));
    c[n] = Complex(1);
    std::vector<Complex> r;
    try {
      for (const auto& d : saturate::roots::isolate_roots(c)) r.push_back(d.center);
    } catch (const Error&) {
      continue;  // a random integer polynomial may have a repeated root
    }
    std::vector<Complex> prod{Complex(1)};
    for (const auto& z : r) {
      std::vector<Complex> next(prod.size() + 1, Complex(0));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] += prod[i];
        next[i] -= z * prod[i];
      }
      prod = std::move(next);
    }
    for (int i = 0; i <= n; ++i) EXPECT_LT(static_cast<double>(abs(prod[i] - c[i])), 1e-35);
  }
}

TEST(Roots, RepeatedRootIsReported) {
  using saturate::roots::Complex;
  const std::vector<Complex> c{Complex(1), Complex(-2), Complex(1)};
  EXPECT_EQ(kind_of([&] { saturate::roots::isolate_roots(c); }), ErrorKind::RootFindingFailure);
}

// ---- purity ----------------------------------------------------------------

TEST(Purity, WeilQuadratics) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t a = 0; a * a <= 4 * p; ++a) {
      for (std::int64_t s : {1, -1}) {
        const auto r = purity_check(weil_quadratic(s * a, p), p, 1);
        EXPECT_TRUE(r.pass) << "a=" << s * a << " p=" << p;
        EXPECT_TRUE(r.norm_identity);
        EXPECT_LE(r.max_deviation, 1e-30);
      }
    }
    // Outside the Hasse range the roots are real with different sizes.
    const auto bad = purity_check(weil_quadratic(2 * p, p), p, 1);
    EXPECT_FALSE(bad.pass);
    EXPECT_TRUE(bad.norm_identity);
  }
}

TEST(Purity, Examples) {
  EXPECT_TRUE(purity_check(ExactPolynomial::from_ints({-1, 1}), 5, 0).pass);
  const auto r = purity_check(ExactPolynomial::from_ints({-5, 1}), 5, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.norm_identity);
  EXPECT_NEAR(r.max_deviation, std::sqrt(5.0) - 1, 1e-12);
  EXPECT_TRUE(purity_check(ExactPolynomial::from_ints({-5, 1}), 5, 2).pass);
  // Negative weight: 1/p has modulus p^{-1}.
  EXPECT_TRUE(purity_check(ExactPolynomial::over_rationals({Rational(-1, 5), 1}), 5, -2).pass);
  EXPECT_EQ(kind_of([] { purity_check(ExactPolynomial::from_ints({-1, 1}), 1, 0); }), ErrorKind::MalformedInput);
}

TEST(Purity, RepeatedRoots) {
  // (T - 5)^2 over Q = 25 at weight 1, and a supersingular-style square.
  const auto sq = weil_quadratic(10, 25);
  const auto r = purity_check(sq, 25, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.norm_identity);
  EXPECT_EQ(r.roots.front().size(), 1U);
  EXPECT_TRUE(purity_check(sq * weil_quadratic(3, 25), 25, 1).pass);
}

TEST(Purity, OverNumberFields) {
  // 1 + 2i has modulus sqrt5 under both embeddings of Q(i).
  const NumberField gauss = qsqrt(-1);
  const auto r = purity_check(ExactPolynomial(gauss, {{-1, -2}, gauss.one()}), 5, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.norm_identity);
  EXPECT_EQ(r.roots.size(), 2U);
  // 1 + sqrt2 is a unit with conjugate 1 - sqrt2 of a different size.
  const NumberField k = qsqrt(2);
  const auto u = purity_check(ExactPolynomial(k, {{-1, -1}, k.one()}), 2, 0);
  EXPECT_FALSE(u.pass);
  EXPECT_TRUE(u.norm_identity);
}

TEST(Purity, NumericImpliesExact) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t q = std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9, 25}[uniform(0, 7)];
    const auto bound = static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    const auto p1 = weil_quadratic(uniform(-bound - 2, bound + 2), q);
    const auto p2 = weil_quadratic(uniform(-bound, bound), q);
    const auto r = purity_check(p1 * p2, q, 1);
    if (r.pass) ASSERT_TRUE(r.norm_identity);
  }
}

TEST(Purity, SquaredRoots) {
  for (std::int64_t a = -6; a <= 6; ++a) {
    // Roots a/2 +- ..., squares satisfy T^2 - (a^2 - 2q) T + q^2.
    EXPECT_TRUE(squared_roots(weil_quadratic(a, 11)) == weil_quadratic(a * a - 22, 121));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t q = uniform(0, 1) ? 7 : 9;
    const auto bound = static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    const auto p = weil_quadratic(uniform(-bound, bound), q) * weil_quadratic(uniform(-bound, bound), q);
    const auto r1 = purity_check(p, q, 1);
    ASSERT_TRUE(r1.pass);
    const auto r2 = purity_check(squared_roots(p), q, 2);
    ASSERT_TRUE(r2.pass);
    ASSERT_LE(r2.max_deviation, 2 * r1.tolerance);
  }
}

TEST(Purity, RootProducts) {
  const auto f = weil_quadratic(3, 7);
  const auto g = weil_quadratic(-5, 7);
  const auto reports = root_product_purity(f * g, {f, g}, 7, 1);
  ASSERT_EQ(reports.size(), 2U);
  for (const auto& r : reports) EXPECT_TRUE(r.pass);
  // Linear factors of (T - 1)(T - 7) are of weight 0 and 2, not 1.
  const auto lin = root_product_purity(ExactPolynomial::from_ints({7, -8, 1}),
                                       {ExactPolynomial::from_ints({-1, 1}), ExactPolynomial::from_ints({-7, 1})}, 7, 1);
  EXPECT_FALSE(lin[0].pass);
  EXPECT_FALSE(lin[1].pass);
  EXPECT_EQ(kind_of([&] { root_product_purity(f, {g}, 7, 1); }), ErrorKind::MalformedInput);
}

// ---- reduction and compatibility -------------------------------------------

TEST(Reduce, Examples) {
  const auto r = reduce_mod(ExactPolynomial::from_ints({4, -3, 1}), 5);
  EXPECT_TRUE(r == saturate::ff::Poly::from_ints(Field::prime(5), {4, 2, 1}));
  // 1/3 = 2 mod 5.
  const auto h = reduce_mod(ExactPolynomial::over_rationals({Rational(1, 3), 1}), 5);
  EXPECT_TRUE(h == saturate::ff::Poly::from_ints(Field::prime(5), {2, 1}));
  EXPECT_EQ(kind_of([] { reduce_mod(ExactPolynomial::over_rationals({Rational(1, 5), 1}), 5); }),
            ErrorKind::BadDenominator);
  EXPECT_EQ(kind_of([] { reduce_mod(ExactPolynomial::from_ints({1, 1}), 5, 5); }), ErrorKind::EllEqualsP);
}

TEST(Reduce, RingHomomorphism) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_plain_like(3, uniform(1, 9));
    const auto b = random_plain_like(3, uniform(1, 9));
    for (std::uint32_t ell : {5U, 7U, 11U}) {
      ASSERT_TRUE(reduce_mod(a * b, ell) == reduce_mod(a, ell) * reduce_mod(b, ell));
    }
  }
}

TEST(Compat, CompanionMatrices) {
  FrobTable table;
  table.p = 5;
  table.degree = 2;
  for (std::int64_t a = -4; a <= 4; ++a) table.entries.push_back({"x" + std::to_string(a), 1, 5, weil_quadratic(a, 5)});
  for (std::uint32_t ell : {3U, 7U, 11U}) {
    const Field f = Field::prime(ell);
    for (std::int64_t a = -4; a <= 4; ++a) {
      // Companion matrix of T^2 - a T + 5.
      const SquareMatrix m = SquareMatrix::from_ints(f, {{0, -5}, {1, a}});
      EXPECT_TRUE(compat_check(table, "x" + std::to_string(a), m));
      const SquareMatrix wrong = SquareMatrix::from_ints(f, {{0, -5}, {1, a + 1}});
      EXPECT_FALSE(compat_check(table, "x" + std::to_string(a), wrong));
    }
  }
  // Over an extension of F_ell the reduction is embedded first.
  const Field f9 = Field::create(3, 2);
  EXPECT_TRUE(compat_check(table, "x1", SquareMatrix::from_ints(f9, {{0, -5}, {1, 1}})));
  EXPECT_EQ(kind_of([&] { compat_check(table, "x1", SquareMatrix::identity(Field::prime(5), 2)); }),
            ErrorKind::EllEqualsP);
  EXPECT_EQ(kind_of([&] { compat_check(table, "nope", SquareMatrix::identity(Field::prime(3), 2)); }),
            ErrorKind::MalformedInput);
}

// ---- tables ----------------------------------------------------------------

TEST(Table, EllipticStyleEntriesPass) {
  FrobTable table;
  table.p = 3;
  table.degree = 2;
  std::int64_t q = 3;
  for (std::uint64_t r = 1; r <= 4; ++r, q *= 3) {
    const auto bound = static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    for (std::int64_t a = -bound; a <= bound; a += std::max<std::int64_t>(1, bound / 3)) {
      table.entries.push_back({"r" + std::to_string(r) + "a" + std::to_string(a), r, q, weil_quadratic(a, q)});
    }
  }
  const auto report = validate_table(table, 1);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.kappa_degree, 1U);
  for (const auto& e : report.entries) {
    EXPECT_TRUE(e.plain && e.plain_exact && e.degree_ok && e.q_ok);
    ASSERT_TRUE(e.purity.has_value());
    EXPECT_TRUE(e.purity->norm_identity);
  }
}

TEST(Table, FailuresAreFlagged) {
  FrobTable table;
  table.p = 5;
  table.degree = 2;
  table.entries.push_back({"good", 1, 5, weil_quadratic(2, 5)});
  table.entries.push_back({"spoiled", 1, 5, weil_quadratic(2, 35)});
  table.entries.push_back({"badq", 1, 6, weil_quadratic(2, 5)});
  table.entries.push_back({"cubic", 1, 5, ExactPolynomial::from_ints({5, 0, 0, 1})});
  table.entries.push_back({"kappa", 2, 5, weil_quadratic(2, 5)});
  const auto report = validate_table(table, 1);
  EXPECT_FALSE(report.pass());
  EXPECT_TRUE(report.entries[0].pass());
  EXPECT_FALSE(report.entries[1].plain);
  EXPECT_FALSE(report.entries[1].failures.empty());
  EXPECT_NE(report.entries[1].failures.front().find("35"), std::string::npos);
  EXPECT_FALSE(report.entries[2].q_ok);
  EXPECT_FALSE(report.entries[3].degree_ok);
  EXPECT_FALSE(report.entries[4].q_ok);
}

TEST(Table, EmptyPasses) {
  FrobTable table;
  table.p = 7;
  table.degree = 2;
  const auto report = validate_table(table, 1);
  EXPECT_TRUE(report.pass());
  EXPECT_TRUE(report.entries.empty());
}

TEST(Table, NumberFieldEntriesAreNecessaryOnly) {
  FrobTable table;
  table.p = 5;
  table.field = qsqrt(-1);
  table.degree = 1;
  const NumberField& k = table.field;
  table.entries.push_back({"gauss", 1, 5, ExactPolynomial(k, {{-1, -2}, k.one()})});
  const auto report = validate_table(table, 1);
  EXPECT_TRUE(report.pass());
  EXPECT_FALSE(report.entries[0].plain_exact);
}

TEST(Table, LogP) {
  EXPECT_EQ(log_p(1, 5), 0U);
  EXPECT_EQ(log_p(125, 5), 3U);
  EXPECT_FALSE(log_p(0, 5).has_value());
  EXPECT_FALSE(log_p(10, 5).has_value());
}
