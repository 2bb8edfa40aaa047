#include <gtest/gtest.h>

#include "reference_data.hpp"

using namespace jt;
using jt::testing::binom_by_factorials;

TEST(PrimeField, AcceptsPrimesRejectsOthers) {
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647));
  for (std::uint64_t bad : {0ULL, 1ULL, 4ULL, 9ULL, 91ULL, 2147483648ULL, 4294967311ULL})
    EXPECT_THROW(PrimeField{bad}, std::invalid_argument) << bad;
}

TEST(PrimeField, Arithmetic) {
  const PrimeField F(7);
  EXPECT_EQ(F.from_int(-1), Fp{6});
  EXPECT_EQ(F.mul(F.inv(Fp{3}), Fp{3}), F.one());
  EXPECT_EQ(F.sign(3), Fp{6});
  EXPECT_THROW(F.inv(F.zero()), std::domain_error);
  const PrimeField big(2147483647);
  EXPECT_EQ(big.mul(big.from_int(-1), big.from_int(-1)), big.one());
}

TEST(BinomExact, Examples) {
  EXPECT_EQ(binom_exact(15, 7), binom_by_factorials(15, 7));
  EXPECT_EQ(binom_exact(15, 7), 6435);
  for (int n = 0; n < 30; ++n) EXPECT_EQ(binom_exact(n, 0), 1);
  EXPECT_EQ(binom_exact(5, -1), 0);
  EXPECT_EQ(binom_exact(5, 6), 0);
  EXPECT_THROW(binom_exact(-1, 0), std::invalid_argument);
}

TEST(BinomExact, PascalIdentity) {
  for (int n = 1; n <= 100; ++n)
    for (int k = 1; k <= n; ++k) ASSERT_EQ(binom_exact(n, k), binom_exact(n - 1, k - 1) + binom_exact(n - 1, k));
}

TEST(BinomSigned, NegativeUpperIndex) {
  EXPECT_EQ(binom_signed(-1, 0), 1);
  EXPECT_EQ(binom_signed(-1, 3), -1);
  EXPECT_EQ(binom_signed(-3, 2), 6);  // (-3)(-4)/2
  EXPECT_EQ(binom_signed(4, 2), 6);
  EXPECT_EQ(binom_signed(-2, -1), 0);
}

TEST(BinomModP, Examples) {
  EXPECT_EQ(binom_mod_p(15, 7, PrimeField(7)), Fp{2});
  EXPECT_EQ(binom_mod_p(10, 5, PrimeField(3)), Fp{0});
  for (auto p : {2, 3, 13})
    for (int n : {0, 1, 17, 1000}) EXPECT_EQ(binom_mod_p(n, 0, PrimeField(p)), Fp{1});
  EXPECT_EQ(binom_mod_p(4, 9, PrimeField(5)), Fp{0});
}

TEST(BinomModP, LucasAndKummerAgreeWithExact) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const PrimeField F(p);
    for (int n = 0; n <= 200; ++n)
      for (int k = 0; k <= n; ++k) {
        const BigInt c = binom_exact(n, k);
        ASSERT_EQ(binom_mod_p(n, k, F), reduce_mod_p(c, F)) << n << " " << k << " p=" << p;
        const auto v = vp_binom(n, k, p);
        ASSERT_EQ(v, vp_exact(c, p)) << n << " " << k << " p=" << p;
        ASSERT_EQ(binom_mod_p(n, k, F).is_zero(), v > 0);
      }
  }
}

TEST(VpBinom, Examples) {
  EXPECT_EQ(vp_binom(15, 7, 7), 0);
  EXPECT_EQ(vp_binom(15, 9, 7), 1);
  EXPECT_EQ(binom_exact(15, 9), 7 * 715);
  for (int n : {0, 5, 99}) EXPECT_EQ(vp_binom(n, 0, 3), 0);
  EXPECT_THROW(vp_binom(5, 6, 3), std::out_of_range);
  EXPECT_THROW(vp_binom(5, -1, 3), std::out_of_range);
}

TEST(BinomSum, DeltaIdentity) {
  for (int s = 1; s <= 12; ++s)
    for (int i = 1; i <= 12; ++i)
      for (int j = i; j <= 12; ++j) {
        BigInt sum = 0;
        for (int k = i; k <= j; ++k) {
          BigInt t = binom_exact(s, k - i) * binom_exact(s - 1 + j - k, s - 1);
          sum += ((j - k) % 2 == 0) ? t : BigInt(-t);
        }
        ASSERT_EQ(sum, i == j ? 1 : 0) << s << " " << i << " " << j;
      }
}

TEST(RobertsDk, Examples) {
  EXPECT_EQ(roberts_dk(0, 0, 1), 1);
  const PrimeField F7(7);
  const BigInt d5 = roberts_dk(15, 7, 5);
  EXPECT_EQ(reduce_mod_p(d5, F7), Fp{4});
  // The printed inverse has determinant 2, so det A_5 = 2^{-1} = 4.
  EXPECT_EQ(gauss_det(jt::testing::printed_a5_inverse()), Fp{2});

  FpMatrix A11(F7, 11, 11);
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j)
      A11.set(i, j, reduce_mod_p(binom_by_factorials(3, 1 + static_cast<int>(j) - static_cast<int>(i)), F7));
  EXPECT_EQ(reduce_mod_p(roberts_dk(3, 1, 11), F7), gauss_det(A11));
  EXPECT_THROW(roberts_dk(1, 1, 0), std::invalid_argument);
}

TEST(RobertsDk, EqualsExactDeterminant) {
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b)
      for (int k = 1; k <= 5; ++k)
        ASSERT_EQ(roberts_dk(a, b, k), jt::testing::laplace_det(jt::testing::binomial_matrix(a, b, k)))
            << a << " " << b << " " << k;
}

TEST(RobertsDkUnitModP, Examples) {
  const auto v = roberts_dk_unit_mod_p(15, 7, 5, PrimeField(7));
  EXPECT_EQ(v.valuation, 0);
  EXPECT_EQ(v.unit, Fp{4});
  for (int a : {0, 3, 20})
    for (int k : {1, 4}) {
      const auto w = roberts_dk_unit_mod_p(a, 0, k, PrimeField(5));
      EXPECT_EQ(w.valuation, 0);
      EXPECT_EQ(w.unit, Fp{1});
    }
  EXPECT_EQ(roberts_dk(2, 1, 1), 2);
  EXPECT_EQ(roberts_dk_unit_mod_p(2, 1, 1, PrimeField(2)).valuation, 1);
}

TEST(RobertsDkUnitModP, AgreesWithExactRoute) {
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= 30; ++b)
      for (int k = 1; k <= 12; ++k) {
        const BigInt d = roberts_dk(a, b, k);  // throws if not integral
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
          const PrimeField F(p);
          const PadicValue v = roberts_dk_unit_mod_p(a, b, k, F);
          if (d == 0) {
            ASSERT_TRUE(v.is_zero()) << a << " " << b << " " << k;
            continue;
          }
          ASSERT_EQ(v.valuation, vp_exact(d, p)) << a << " " << b << " " << k << " p=" << p;
          const BigInt unit = d / boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(v.valuation));
          ASSERT_EQ(v.unit, reduce_mod_p(unit, F));
          ASSERT_EQ(v.reduced(), reduce_mod_p(d, F));
        }
      }
}
