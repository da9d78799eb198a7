#include <gtest/gtest.h>

#include "generators.hpp"
#include "saturate/error.hpp"
#include "saturate/weilres.hpp"

using saturate::Error;
using saturate::ErrorKind;
using saturate::ff::Elem;
using saturate::ff::Embedding;
using saturate::ff::Field;
using saturate::ff::Poly;
using namespace saturate::matgrp;
using namespace saturate::weilres;
using namespace saturate::testing;

namespace {

FiniteMatrixGroup sl(const Field& f, std::size_t n) {
  return group_closure(f, n, special_linear_generators(f, n));
}

FiniteMatrixGroup root_group(const Field& f) {
  std::vector<SquareMatrix> gens;
  for (auto b : f.prime_basis()) {
    SquareMatrix m = SquareMatrix::identity(f, 2);
    m.at(0, 1) = b;
    gens.push_back(m);
  }
  return group_closure(f, 2, gens);
}

// Image of SL_n(F_q) under F_q -> F_{q^d}, as a group over the big field.
FiniteMatrixGroup embedded_sl(const Field& small, const Field& big, std::size_t n) {
  std::vector<SquareMatrix> gens;
  for (const auto& g : special_linear_generators(small, n)) gens.push_back(embed(g, big));
  return group_closure(big, n, gens);
}

}  // namespace

TEST(WeilRes, IdentityGoesToIdentity) {
  const Field f9 = Field::create(3, 2);
  const RestrictionContext ctx(f9, Field::prime(3));
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(weilres_embed(ctx, SquareMatrix::identity(f9, n)) == SquareMatrix::identity(Field::prime(3), 2 * n));
  }
}

TEST(WeilRes, ScalarIsMultiplicationMatrix) {
  // On F_4 = F_2[x]/(x^2+x+1) with basis (1, x), multiplication by x sends
  // 1 -> x and x -> x^2 = 1 + x.
  const Field f4 = Field::create(2, 2);
  ASSERT_EQ(f4.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const Field f2 = Field::prime(2);
  const RestrictionContext ctx(f4, f2);
  const SquareMatrix x(f4, 1, {f4.modulus_root()});
  EXPECT_TRUE(weilres_embed(ctx, x) == SquareMatrix::from_ints(f2, {{0, 1}, {1, 1}}));

  for (auto g : f4.elements()) {
    const SquareMatrix img = weilres_embed(ctx, SquareMatrix(f4, 1, {g}));
    // charpoly of multiplication by g is (T - g)(T - g^2), computed over F_4.
    const Poly expect = Poly(f4, {f4.neg(g), f4.one()}) * Poly(f4, {f4.neg(f4.frobenius(g)), f4.one()});
    const Embedding up(f2, f4);
    EXPECT_TRUE(charpoly(img).map_coeffs(f4, up) == expect);
  }
}

TEST(WeilRes, RejectsForeignField) {
  const RestrictionContext ctx(Field::create(5, 2), Field::prime(5));
  EXPECT_THROW(
      try { weilres_embed(ctx, SquareMatrix::identity(Field::prime(5), 2)); } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
        throw;
      },
      Error);
}

TEST(WeilRes, ContextValidation) {
  EXPECT_THROW(RestrictionContext(Field::create(2, 3), Field::create(2, 2)), Error);
  EXPECT_THROW(RestrictionContext(Field::create(3, 2), Field::prime(5)), Error);
  const Field f9 = Field::create(3, 2);
  EXPECT_THROW(RestrictionContext(f9, Field::prime(3), {f9.one(), f9.from_int(2)}), Error);
  EXPECT_THROW(RestrictionContext(f9, Field::prime(3), {f9.one()}), Error);
}

TEST(WeilRes, CoordinatesRoundTrip) {
  const Field f16 = Field::create(2, 4);
  const Field f4 = Field::create(2, 2);
  const RestrictionContext ctx(f16, f4);
  const Embedding up(f4, f16);
  for (auto y : f16.elements()) {
    const auto c = ctx.coordinates(y);
    ASSERT_EQ(c.size(), 2U);
    Elem back = f16.zero();
    for (unsigned l = 0; l < 2; ++l) back = f16.add(back, f16.mul(up(c[l]), ctx.basis()[l]));
    EXPECT_EQ(back, y);
  }
}

TEST(WeilRes, MonomorphismExhaustiveGL1F4) {
  const Field f4 = Field::create(2, 2);
  const RestrictionContext ctx(f4, Field::prime(2));
  std::vector<SquareMatrix> units;
  for (auto g : f4.elements())
    if (g.code) units.emplace_back(f4, 1, std::vector<Elem>{g});
  for (const auto& a : units) {
    for (const auto& b : units) {
      EXPECT_TRUE(weilres_embed(ctx, a * b) == weilres_embed(ctx, a) * weilres_embed(ctx, b));
      if (!(a == b)) EXPECT_FALSE(weilres_embed(ctx, a) == weilres_embed(ctx, b));
    }
    EXPECT_TRUE(weilres_embed(ctx, inverse(a)) == inverse(weilres_embed(ctx, a)));
  }
}

TEST(WeilRes, MonomorphismRandomGL2F9) {
  const Field f9 = Field::create(3, 2);
  const RestrictionContext ctx(f9, Field::prime(3));
  for (int trial = 0; trial < 1000; ++trial) {
    const SquareMatrix a = random_invertible(f9, 2);
    const SquareMatrix b = random_invertible(f9, 2);
    ASSERT_TRUE(weilres_embed(ctx, a * b) == weilres_embed(ctx, a) * weilres_embed(ctx, b));
    ASSERT_TRUE(weilres_embed(ctx, inverse(a)) == inverse(weilres_embed(ctx, a)));
    if (!(a == b)) ASSERT_FALSE(weilres_embed(ctx, a) == weilres_embed(ctx, b));
  }
}

TEST(WeilRes, AdditiveAndLinear) {
  const Field f25 = Field::create(5, 2);
  const RestrictionContext ctx(f25, Field::prime(5));
  for (int trial = 0; trial < 200; ++trial) {
    const SquareMatrix a = random_matrix(f25, 2);
    const SquareMatrix b = random_matrix(f25, 2);
    ASSERT_TRUE(weilres_embed(ctx, a + b) == weilres_embed(ctx, a) + weilres_embed(ctx, b));
  }
}

TEST(WeilRes, CharpolyIsNormForm) {
  // Exhaustive for n = 1 and q <= 9; random for n = 2.
  for (auto [ell, k] : {std::pair{2U, 2U}, {2U, 3U}, {3U, 2U}}) {
    const Field big = Field::create(ell, k);
    const Field small = Field::prime(ell);
    const RestrictionContext ctx(big, small);
    const Embedding up(small, big);
    for (auto g : big.elements()) {
      const SquareMatrix m(big, 1, {g});
      EXPECT_TRUE(charpoly(weilres_embed(ctx, m)).map_coeffs(big, up) == norm_form_charpoly(ctx, m));
    }
  }
  const Field f9 = Field::create(3, 2);
  const Field f3 = Field::prime(3);
  const RestrictionContext ctx(f9, f3);
  const Embedding up(f3, f9);
  for (const auto& m : all_matrices(f9, 2)) {
    ASSERT_TRUE(charpoly(weilres_embed(ctx, m)).map_coeffs(f9, up) == norm_form_charpoly(ctx, m));
  }
}

TEST(WeilRes, CharpolyOverIntermediateField) {
  const Field f16 = Field::create(2, 4);
  const Field f4 = Field::create(2, 2);
  const RestrictionContext ctx(f16, f4);
  const Embedding up(f4, f16);
  for (int trial = 0; trial < 100; ++trial) {
    const SquareMatrix m = random_matrix(f16, 2);
    ASSERT_TRUE(charpoly(weilres_embed(ctx, m)).map_coeffs(f16, up) == norm_form_charpoly(ctx, m));
  }
}

TEST(WeilRes, UnipotentTransportAndTPowers) {
  // ell = 7 > nd = 4.
  const Field f49 = Field::create(7, 2);
  const Field f7 = Field::prime(7);
  const RestrictionContext ctx(f49, f7);
  const Embedding up(f7, f49);
  for (int trial = 0; trial < 40; ++trial) {
    const SquareMatrix u = random_unipotent(f49, 2);
    const SquareMatrix iu = weilres_embed(ctx, u);
    ASSERT_TRUE(is_unipotent(iu));
    for (auto t : f7.elements()) {
      ASSERT_TRUE(weilres_embed(ctx, t_power(u, up(t))) == t_power(iu, t));
    }
  }
}

TEST(WeilRes, BasisChangeIsConjugation) {
  const Field f25 = Field::create(5, 2);
  const Field f5 = Field::prime(5);
  const RestrictionContext power(f25, f5);
  const Elem a = f25.primitive();
  const Elem b = f25.add(f25.one(), f25.pow(a, 7));
  const RestrictionContext other(f25, f5, {a, b});
  // The change-of-basis matrix C with columns = coordinates of the new basis
  // in the old one, blown up to n = 2 blocks.
  SquareMatrix c(f5, 4);
  const std::vector<Elem> nb{a, b};
  for (std::size_t blk = 0; blk < 2; ++blk) {
    for (unsigned j = 0; j < 2; ++j) {
      const auto co = power.coordinates(nb[j]);
      for (unsigned l = 0; l < 2; ++l) c.at(blk * 2 + l, blk * 2 + j) = co[l];
    }
  }
  const SquareMatrix ci = inverse(c);
  for (int trial = 0; trial < 100; ++trial) {
    const SquareMatrix m = random_matrix(f25, 2);
    ASSERT_TRUE(weilres_embed(other, m) == ci * weilres_embed(power, m) * c);
  }
}

TEST(WeilRes, GroupOrderPreserved) {
  const Field f25 = Field::create(5, 2);
  const Field f5 = Field::prime(5);
  const RestrictionContext ctx(f25, f5);
  const auto triv = weilres_group(ctx, FiniteMatrixGroup::trivial(f25, 2));
  EXPECT_EQ(triv.order(), 1U);
  EXPECT_EQ(triv.dim(), 4U);

  const auto rg = weilres_group(ctx, root_group(f25));
  EXPECT_EQ(rg.order(), 25U);
  EXPECT_TRUE(rg.field() == f5);

  const auto s = sl(Field::create(3, 2), 2);
  const auto img = weilres_group(RestrictionContext(Field::create(3, 2), Field::prime(3)), s);
  EXPECT_EQ(img.order(), sl2_order(9));
}

TEST(WeilRes, RestrictionHeight) {
  for (std::int64_t d = 1; d <= 6; ++d) {
    for (std::int64_t v = 1; v <= 6; ++v) {
      EXPECT_EQ(restriction_height(d, v), d * (v - 1));
      EXPECT_EQ(restriction_height(d, v), d * v - d);
    }
  }
  EXPECT_EQ(restriction_height(1, 5), 4);
  EXPECT_EQ(restriction_height(2, 2), 2);
  EXPECT_EQ(restriction_height(3, 4), 9);
  EXPECT_THROW(restriction_height(0, 3), Error);
  EXPECT_THROW(restriction_height(2, 0), Error);
}

TEST(WeilRes, SaturationTransport) {
  const Field f25 = Field::create(5, 2);
  const RestrictionContext ctx(f25, Field::prime(5));

  const auto rg = weilres_saturation_check(ctx, root_group(f25));
  EXPECT_TRUE(rg.hypothesis_ok);
  EXPECT_TRUE(rg.checked);
  EXPECT_TRUE(rg.saturated);

  const auto triv = weilres_saturation_check(ctx, FiniteMatrixGroup::trivial(f25, 2));
  EXPECT_TRUE(triv.checked && triv.saturated);

  const auto full = weilres_saturation_check(ctx, sl(f25, 2));
  EXPECT_TRUE(full.checked);
  EXPECT_TRUE(full.saturated);
  EXPECT_FALSE(full.witness.has_value());
}

TEST(WeilRes, SaturationCheckSkippedForSmallCharacteristic) {
  // ell = 3, dimW = 4: the point-level test needs ell > dimW; the hypothesis
  // ell > dimW - d = 2 holds.
  const Field f9 = Field::create(3, 2);
  const auto r = weilres_saturation_check(RestrictionContext(f9, Field::prime(3)), root_group(f9));
  EXPECT_TRUE(r.hypothesis_ok);
  EXPECT_FALSE(r.checked);
  // ell = 2, dimW = 4, d = 2: hypothesis fails.
  const Field f4 = Field::create(2, 2);
  const auto s = weilres_saturation_check(RestrictionContext(f4, Field::prime(2)), root_group(f4));
  EXPECT_FALSE(s.hypothesis_ok);
}

TEST(WeilRes, SaturationAndRestrictionDoNotCommute) {
  // SL_2(F_5) sits diagonally in the restriction of SL_2 from F_25. Its
  // F_5-saturation stays three-dimensional, while the restriction of the
  // F_25-saturation (all of SL_2(F_25)) spans six dimensions over F_5.
  const Field f25 = Field::create(5, 2);
  const Field f5 = Field::prime(5);
  const RestrictionContext ctx(f25, f5);
  using saturate::envelope::log_span;
  using saturate::envelope::saturation_closure;
  using saturate::envelope::Scalars;

  const auto diag = weilres_group(ctx, embedded_sl(f5, f25, 2));
  EXPECT_EQ(diag.order(), sl2_order(5));
  const auto sat = saturation_closure(diag, 1);
  EXPECT_EQ(sat.order(), sl2_order(5));
  EXPECT_EQ(log_span(sat, Scalars::full).dimension(), 3U);

  const auto big = weilres_group(ctx, sl(f25, 2));
  EXPECT_EQ(log_span(big, Scalars::full).dimension(), 6U);
}
