#include <gtest/gtest.h>

#include <cstdint>

#include "oligoforge/power_series.hpp"

using oligoforge::DomainError;
using oligoforge::Polynomial;
using oligoforge::PowerSeries;

TEST(Polynomial, ArithmeticAndTrim) {
  const Polynomial<std::int64_t> a({1, 2});   // 1 + 2y
  const Polynomial<std::int64_t> b({-1, 0, 3});  // -1 + 3y^2
  const auto p = a * b;
  EXPECT_EQ(p.coeff(0), -1);
  EXPECT_EQ(p.coeff(1), -2);
  EXPECT_EQ(p.coeff(2), 3);
  EXPECT_EQ(p.coeff(3), 6);
  EXPECT_EQ(p.coeff(9), 0);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a + b).size(), 3u);
  EXPECT_EQ(Polynomial<std::int64_t>::monomial(5, 2).coeff(2), 5);
}

TEST(PowerSeries, InverseOfOneMinusX) {
  PowerSeries<std::int64_t> s(6, {1, -1});
  const auto inv = s.inverse();
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(inv[k], 1);
  EXPECT_EQ(s * inv, PowerSeries<std::int64_t>::monomial(6, 1, 0));
}

TEST(PowerSeries, InverseNeedsUnitConstant) {
  PowerSeries<std::int64_t> s(4, {2, 1});
  EXPECT_THROW(s.inverse(), DomainError);
  PowerSeries<std::int64_t> neg(4, {-1, 1});
  EXPECT_EQ(neg * neg.inverse(), PowerSeries<std::int64_t>::monomial(4, 1, 0));
}

TEST(PowerSeries, GeometricSeries) {
  const auto g = PowerSeries<std::int64_t>::geometric(7, -2, 2);  // 1/(1 + 2x^2)
  EXPECT_EQ(g.coefficients(), (std::vector<std::int64_t>{1, 0, -2, 0, 4, 0, -8}));
  EXPECT_THROW((PowerSeries<std::int64_t>::geometric(3, 1, 0)), DomainError);
}

TEST(PowerSeries, GeometricSumAgreesWithInverse) {
  // u = 2x + 3x^2 - x^3; 1/(1-u) both ways.
  PowerSeries<std::int64_t> u(8, {0, 2, 3, -1});
  const auto one = PowerSeries<std::int64_t>::monomial(8, 1, 0);
  EXPECT_EQ(PowerSeries<std::int64_t>::geometric_sum(u), (one - u).inverse());
  EXPECT_THROW(PowerSeries<std::int64_t>::geometric_sum(one), DomainError);
}

TEST(PowerSeries, PolynomialCoefficients) {
  using P = Polynomial<std::int64_t>;
  // 1/(1 - (1+y)x) = sum (1+y)^k x^k
  const auto s = PowerSeries<P>::geometric(5, P({1, 1}), 1);
  EXPECT_EQ(s[4].coeff(2), 6);
  EXPECT_EQ(s[4].coeff(4), 1);
  EXPECT_EQ(s[3].coeff(1), 3);
}

TEST(PowerSeries, OrderMismatchAndZeroOrder) {
  EXPECT_THROW(PowerSeries<std::int64_t>(0), DomainError);
  PowerSeries<std::int64_t> a(3), b(4);
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(a * b, DomainError);
}
