#pragma once

// Exact counts of shift-constrained DNA words: the exhaustive oracle, the
// boundary formula and recursion for g_s(n), the rational generating
// function, the dominant root rho_s, the mu_1 = m closed form, and the
// bivariate (length, GC-content) series for mu_1 = 0.

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "oligoforge/errors.hpp"
#include "oligoforge/power_series.hpp"
#include "oligoforge/seqcore.hpp"

namespace oligoforge {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultOracleCap = 12;

// OLIGOFORGE_ORACLE_CAP, or the default when unset or unparsable.
inline std::size_t oracle_cap_from_env() {
  if (const char* v = std::getenv("OLIGOFORGE_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0') return static_cast<std::size_t>(cap);
  }
  return kDefaultOracleCap;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

/// Counts the words of length n over {A,C,G,T} accepted by `pred`, which is
/// called with a std::span<const Base>. The 4^n space is split by leading
/// base across worker tasks.
template <class Pred>
BigInt count_brute_force(std::size_t n, Pred pred, std::size_t cap = kDefaultOracleCap) {
  if (n == 0) throw DomainError("oracle length must be >= 1");
  if (n > cap) {
    throw CapExceeded("brute-force length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  auto count_with_first = [n, &pred](Base first) -> std::uint64_t {
    std::vector<Base> word(n, Base::A);
    std::vector<std::uint8_t> digit(n, 0);
    word[0] = first;
    std::uint64_t count = 0;
    while (true) {
      if (pred(std::span<const Base>(word))) ++count;
      // odometer over positions 1..n-1
      for (std::size_t pos = n;;) {
        if (pos == 1) return count;
        --pos;
        if (++digit[pos] < 4) {
          word[pos] = kBases[digit[pos]];
          break;
        }
        digit[pos] = 0;
        word[pos] = kBases[0];
      }
    }
  };
  std::vector<std::future<std::uint64_t>> parts;
  for (Base b : kBases) parts.push_back(std::async(std::launch::async, count_with_first, b));
  BigInt total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

namespace predicates {

// mu_i = 0 for i = 1..s (shifts past the word length are vacuous).
inline auto no_shift_matches(std::size_t s) {
  return [s](std::span<const Base> q) {
    for (std::size_t i = 1; i <= s && i < q.size(); ++i) {
      if (mu(q, i) != 0) return false;
    }
    return true;
  };
}

// No complementary pair anywhere in the word.
inline auto complement_free() {
  return [](std::span<const Base> q) {
    bool seen[4] = {false, false, false, false};
    for (Base b : q) {
      seen[static_cast<std::size_t>(b)] = true;
      if (seen[static_cast<std::size_t>(complement(b))]) return false;
    }
    return true;
  };
}

inline auto mu1_equals(std::size_t m) {
  return [m](std::span<const Base> q) { return (q.size() < 2 ? 0 : mu(q, 1)) == m; };
}

inline auto gc_equals(std::size_t w) {
  return [w](std::span<const Base> q) { return gc_content(q) == w; };
}

inline auto mu1_zero_with_gc(std::size_t w) {
  return [w](std::span<const Base> q) { return gc_content(q) == w && (q.size() < 2 || mu(q, 1) == 0); };
}

}  // namespace predicates

// ---------------------------------------------------------------------------
// g_s(n): words of length n with mu_1 = ... = mu_s = 0

/// g_{n-1}(n) = 4 (2^n - 1): words over one of {A,G}, {A,C}, {T,G}, {T,C}.
inline BigInt g_boundary(std::size_t n) {
  if (n <= 1) throw DomainError("g_boundary requires n > 1");
  return 4 * ((BigInt(1) << n) - 1);
}

struct CountTable {
  std::size_t s;
  std::vector<BigInt> values;  // values[n - 1] = g_s(n)

  const BigInt& at(std::size_t n) const { return values.at(n - 1); }
  std::size_t max_length() const noexcept { return values.size(); }
};

/// g_s(1..N) from g_s(n) = 2 g_s(n-1) + g_s(n-s) for n > s, with g_s(n) =
/// g_{n-1}(n) for 1 < n <= s and g_s(1) = 4.
inline CountTable g_table(std::size_t s, std::size_t max_n) {
  if (s == 0) throw DomainError("shift depth must be >= 1");
  CountTable t{s, {}};
  t.values.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n == 1) {
      t.values.emplace_back(4);
    } else if (n <= s) {
      t.values.push_back(g_boundary(n));
    } else {
      t.values.push_back(2 * t.values[n - 2] + t.values[n - s - 1]);
    }
  }
  return t;
}

inline BigInt g_recursive(std::size_t s, std::size_t n) {
  if (n == 0) throw DomainError("length must be >= 1");
  return g_table(s, n).values.back();
}

/// Coefficients of G_s(z) = sum_{n>=1} g_s(n) z^-n. With x = 1/z this is
/// 4 (x + x^2 + ... + x^s) / (1 - 2x - x^s), expanded by series division.
inline CountTable g_series(std::size_t s, std::size_t max_n) {
  if (s == 0) throw DomainError("shift depth must be >= 1");
  const std::size_t order = max_n + 1;
  PowerSeries<BigInt> num(order);
  for (std::size_t k = 1; k <= s && k < order; ++k) num[k] = 4;
  PowerSeries<BigInt> den = PowerSeries<BigInt>::monomial(order, 1, 0);
  den -= PowerSeries<BigInt>::monomial(order, 2, 1);
  den -= PowerSeries<BigInt>::monomial(order, 1, s);
  const auto g = num * den.inverse();
  CountTable t{s, {}};
  for (std::size_t n = 1; n <= max_n; ++n) t.values.push_back(g[n]);
  return t;
}

// ---------------------------------------------------------------------------
// Growth

// psi_s(z) = z^s - 2 z^{s-1} - 1
inline long double psi(std::size_t s, long double z) {
  return std::pow(z, static_cast<long double>(s)) - 2 * std::pow(z, static_cast<long double>(s - 1)) - 1;
}

struct GrowthAnalysis {
  std::size_t s;
  long double rho;
  long double tolerance;
  long double residual;  // |psi_s(rho)|
  std::size_t iterations;
};

/// Bisection for the root of psi_s in (2, 3); psi_s(2) = -1 < 0 < psi_s(3).
inline GrowthAnalysis dominant_root(std::size_t s, long double tol = 1e-15L) {
  if (s < 2) throw DomainError("dominant root requires s >= 2");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  long double lo = 2, hi = 3;
  std::size_t it = 0;
  while (hi - lo > 2 * tol) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (psi(s, mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }
  const long double rho = lo + (hi - lo) / 2;
  return {s, rho, tol, std::fabs(psi(s, rho)), it};
}

namespace detail {
using BigFloat = boost::multiprecision::cpp_bin_float_50;
inline long double big_ratio(const BigInt& num, const BigInt& den) {
  return static_cast<long double>(BigFloat(num) / BigFloat(den));
}
}  // namespace detail

/// g_s(n + 1) / g_s(n).
inline long double growth_check(std::size_t s, std::size_t n) {
  const auto t = g_table(s, n + 1);
  return detail::big_ratio(t.at(n + 1), t.at(n));
}

/// g_s(n) / rho^n, the numeric estimate of beta_s.
inline long double beta_estimate(std::size_t s, std::size_t n, long double rho) {
  using detail::BigFloat;
  const BigFloat g(g_recursive(s, n));
  return static_cast<long double>(g / boost::multiprecision::pow(BigFloat(rho), static_cast<int>(n)));
}

// ---------------------------------------------------------------------------
// mu_1 = m and GC-content counts

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Words of length n with mu_1 = m: 4 C(n-1, m) 3^{n-m-1}.
inline BigInt count_mu1(std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("length must be >= 1");
  if (m > n - 1) throw DomainError("m must lie in [0, n-1]");
  return 4 * binomial(n - 1, m) * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n - m - 1));
}

/// Truncated bivariate series: coefficient of x^n y^w for n <= max_n.
class BivariateSeries {
 public:
  using Series = PowerSeries<Polynomial<BigInt>>;

  explicit BivariateSeries(Series s) : s_(std::move(s)) {}

  std::size_t max_length() const noexcept { return s_.order() - 1; }
  BigInt coeff(std::size_t n, std::size_t w) const {
    if (n > max_length()) throw DomainError("coefficient beyond series order");
    return s_[n].coeff(w);
  }

 private:
  Series s_;
};

/// Phi(x, y) = (1 - 2x/(1+x) - 2xy/(1+xy))^-1; [x^n y^w] counts words of
/// length n and GC-content w with mu_1 = 0.
inline BivariateSeries gj_coefficients(std::size_t max_n) {
  if (max_n == 0) throw DomainError("series order must be >= 1");
  using Poly = Polynomial<BigInt>;
  using Series = BivariateSeries::Series;
  const std::size_t order = max_n + 1;
  const Poly y = Poly::monomial(1, 1);

  const Series inv_1px = Series::geometric(order, Poly(-1), 1);    // 1/(1+x)
  const Series inv_1pxy = Series::geometric(order, Poly(0) - y, 1);  // 1/(1+xy)
  const Series two_x = Series::monomial(order, Poly(2), 1);
  const Series two_xy = Series::monomial(order, Poly(2) * y, 1);

  const Series u = two_x * inv_1px + two_xy * inv_1pxy;
  return BivariateSeries(Series::geometric_sum(u));
}

}  // namespace oligoforge
