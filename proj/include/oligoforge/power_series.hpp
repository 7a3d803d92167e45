#pragma once

// Exact polynomial and truncated power-series arithmetic over any
// commutative ring type (integers, big integers, or Polynomial<T> itself).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oligoforge/errors.hpp"

namespace oligoforge {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) : c_{std::move(constant)} { trim(); }  // NOLINT(implicit)
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  // Number of stored coefficients; 0 for the zero polynomial.
  std::size_t size() const noexcept { return c_.size(); }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Power series sum_k a_k x^k known modulo x^order.
template <class T>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : a_(order, T(0)) {
    if (order == 0) throw DomainError("power series order must be >= 1");
  }
  PowerSeries(std::size_t order, const std::vector<T>& coeffs) : PowerSeries(order) {
    for (std::size_t k = 0; k < std::min(order, coeffs.size()); ++k) a_[k] = coeffs[k];
  }

  // c * x^k, truncated.
  static PowerSeries monomial(std::size_t order, T c, std::size_t k) {
    PowerSeries s(order);
    if (k < order) s.a_[k] = std::move(c);
    return s;
  }

  // 1 / (1 - r x^k) = sum_j r^j x^{jk}
  static PowerSeries geometric(std::size_t order, const T& ratio, std::size_t k) {
    if (k == 0) throw DomainError("geometric series step must be >= 1");
    PowerSeries s(order);
    T term(1);
    for (std::size_t e = 0; e < order; e += k) {
      s.a_[e] = term;
      term = term * ratio;
    }
    return s;
  }

  std::size_t order() const noexcept { return a_.size(); }
  const T& operator[](std::size_t k) const { return a_.at(k); }
  T& operator[](std::size_t k) { return a_.at(k); }
  const std::vector<T>& coefficients() const noexcept { return a_; }

  PowerSeries& operator+=(const PowerSeries& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.require_same_order(b);
    const std::size_t n = a.order();
    PowerSeries c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.a_[i] == T(0)) continue;
      for (std::size_t j = 0; i + j < n; ++j) c.a_[i + j] += a.a_[i] * b.a_[j];
    }
    return c;
  }

  friend PowerSeries operator*(const T& s, PowerSeries p) {
    for (auto& c : p.a_) c = s * c;
    return p;
  }

  /// Multiplicative inverse by long division. The constant term must be +1 or
  /// -1 so every coefficient stays in the ring.
  PowerSeries inverse() const {
    const T& c0 = a_[0];
    if (!(c0 == T(1) || c0 == T(-1))) throw DomainError("power series constant term is not a unit");
    PowerSeries inv(order());
    inv.a_[0] = c0;  // 1/c0 == c0 for c0 = +-1
    for (std::size_t k = 1; k < order(); ++k) {
      T acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += a_[j] * inv.a_[k - j];
      inv.a_[k] = T(0) - c0 * acc;
    }
    return inv;
  }

  /// 1 / (1 - u) = sum_j u^j, for u with zero constant term.
  static PowerSeries geometric_sum(const PowerSeries& u) {
    if (!(u.a_[0] == T(0))) throw DomainError("geometric sum needs a series without constant term");
    PowerSeries total = monomial(u.order(), T(1), 0);
    PowerSeries power = total;
    // u^j vanishes below x^j, so order - 1 powers suffice.
    for (std::size_t j = 1; j < u.order(); ++j) {
      power = power * u;
      total += power;
    }
    return total;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.a_ == b.a_; }

 private:
  void require_same_order(const PowerSeries& o) const {
    if (o.order() != order()) throw DomainError("power series orders differ");
  }

  std::vector<T> a_;
};

}  // namespace oligoforge
