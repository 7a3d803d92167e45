#pragma once

// Nussinov minimum-free-energy folding with traceback, and the
// nearest-neighbour approximate energy models.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "oligoforge/errors.hpp"
#include "oligoforge/seqcore.hpp"

namespace oligoforge {

using Energy = std::int64_t;
using RationalEnergy = boost::rational<std::int64_t>;

/// Pairing energies alpha(x, y). Only Watson-Crick pairs carry energy; every
/// other pair is fixed at 0.
class EnergyParams {
 public:
  EnergyParams() = default;
  EnergyParams(Energy at, Energy gc) : at_(at), gc_(gc) {
    if (at > 0 || gc > 0) throw DomainError("pair energies must be <= 0");
  }

  Energy at() const noexcept { return at_; }
  Energy gc() const noexcept { return gc_; }

  Energy alpha(Base x, Base y) const noexcept {
    if (complement(x) != y) return 0;
    return is_gc(x) ? gc_ : at_;
  }

  // alpha == -1 on every complementary pair; makes pairing sums count matches.
  static EnergyParams unit() { return EnergyParams(-1, -1); }

  friend bool operator==(const EnergyParams&, const EnergyParams&) = default;

 private:
  Energy at_ = -1;
  Energy gc_ = -2;
};

/// E_{i,j} for 1 <= i <= j <= n, plus the zero boundary E_{i,i-1}.
/// Accessors take the 1-based indices used in printed tables.
class EnergyTable {
 public:
  explicit EnergyTable(std::size_t n) : n_(n), cells_((n + 2) * (n + 2), 0) {}

  std::size_t size() const noexcept { return n_; }

  // Valid for 1 <= i <= n, i - 1 <= j <= n.
  Energy operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * (n_ + 2) + j]; }
  Energy& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * (n_ + 2) + j]; }

  Energy min_free_energy() const noexcept { return (*this)(1, n_); }

 private:
  std::size_t n_;
  std::vector<Energy> cells_;
};

namespace detail {
// Evaluates the recurrence at (i, j) from already-filled entries.
inline Energy nussinov_cell(const EnergyTable& e, const DnaSequence& q, const EnergyParams& params,
                            std::size_t i, std::size_t j) {
  Energy best = e(i + 1, j - 1) + params.alpha(q[i - 1], q[j - 1]);
  for (std::size_t k = i + 1; k <= j; ++k) best = std::min(best, e(i, k - 1) + e(k, j));
  return best;
}
}  // namespace detail

/// Fills the table diagonal by diagonal: (1,2),(2,3),...; then (1,3),(2,4),...
/// O(n^3) time, O(n^2) space.
inline EnergyTable nussinov_table(const DnaSequence& q, const EnergyParams& params = {}) {
  const std::size_t n = q.size();
  EnergyTable e(n);
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t i = 1; i + d <= n; ++i) e(i, i + d) = detail::nussinov_cell(e, q, params, i, i + d);
  }
  return e;
}

/// Recomputes every upper-triangle entry from its dependencies and compares.
inline bool table_is_consistent(const EnergyTable& e, const DnaSequence& q, const EnergyParams& params = {}) {
  const std::size_t n = e.size();
  if (n != q.size()) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    if (e(i, i) != 0 || e(i, i - 1) != 0) return false;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (e(i, j) != detail::nussinov_cell(e, q, params, i, j)) return false;
    }
  }
  return true;
}

inline Energy min_free_energy(const DnaSequence& q, const EnergyParams& params = {}) {
  return nussinov_table(q, params).min_free_energy();
}

struct BasePair {
  std::size_t i;  // 1-based, i < j
  std::size_t j;
  friend bool operator==(const BasePair&, const BasePair&) = default;
  friend auto operator<=>(const BasePair&, const BasePair&) = default;
};

struct SecondaryStructure {
  std::vector<BasePair> pairs;  // sorted by i
  Energy energy = 0;

  // '(' / ')' at paired positions, '.' elsewhere.
  std::string dot_bracket(std::size_t n) const {
    std::string s(n, '.');
    for (const auto& p : pairs) {
      s[p.i - 1] = '(';
      s[p.j - 1] = ')';
    }
    return s;
  }
};

/// Backtracks one minimum-energy structure. At each interval the pairing branch
/// wins ties when it carries negative energy; otherwise the smallest split k is taken.
inline SecondaryStructure traceback(const EnergyTable& e, const DnaSequence& q,
                                    const EnergyParams& params = {}) {
  if (e.size() != q.size()) throw DomainError("energy table and sequence lengths differ");
  SecondaryStructure s;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{1, q.size()}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (i >= j) continue;
    const Energy a = params.alpha(q[i - 1], q[j - 1]);
    if (a < 0 && e(i, j) == e(i + 1, j - 1) + a) {
      s.pairs.push_back({i, j});
      s.energy += a;
      stack.emplace_back(i + 1, j - 1);
      continue;
    }
    for (std::size_t k = i + 1; k <= j; ++k) {
      if (e(i, k - 1) + e(k, j) == e(i, j)) {
        stack.emplace_back(k, j);
        stack.emplace_back(i, k - 1);
        break;
      }
    }
  }
  std::ranges::sort(s.pairs);
  return s;
}

inline constexpr Energy kDefaultStructureThreshold = -2;

/// True when the minimum free energy reaches the threshold (threshold <= 0).
inline bool has_structure(const DnaSequence& q, const EnergyParams& params = {},
                          Energy threshold = kDefaultStructureThreshold) {
  if (threshold > 0) throw DomainError("structure threshold must be <= 0");
  return min_free_energy(q, params) <= threshold;
}

/// kappa + sum_{l=1..L} gamma_l * sum_i alpha(q_i, q_{i+l}).
class LinearEnergyModel {
 public:
  // kappa = 0, gamma_l = 2^-(l-1), L = 4.
  LinearEnergyModel() : LinearEnergyModel(0, {1, {1, 2}, {1, 4}, {1, 8}}) {}

  LinearEnergyModel(RationalEnergy kappa, std::vector<RationalEnergy> gammas)
      : kappa_(kappa), gammas_(std::move(gammas)) {
    if (gammas_.empty()) throw DomainError("linear energy model needs at least one weight");
    for (std::size_t l = 0; l < gammas_.size(); ++l) {
      if (gammas_[l] <= 0) throw DomainError("linear energy weights must be positive");
      if (l > 0 && gammas_[l] > gammas_[l - 1]) {
        throw DomainError("linear energy weights must be non-increasing");
      }
    }
  }

  // Plain nearest-neighbour model: kappa + sum_i alpha(q_i, q_{i+1}).
  static LinearEnergyModel nearest_neighbour(RationalEnergy kappa = 0) { return {kappa, {1}}; }

  RationalEnergy kappa() const noexcept { return kappa_; }
  const std::vector<RationalEnergy>& gammas() const noexcept { return gammas_; }
  std::size_t depth() const noexcept { return gammas_.size(); }

 private:
  RationalEnergy kappa_;
  std::vector<RationalEnergy> gammas_;
};

// sum_{i} alpha(q_i, q_{i+shift}) over the n - shift aligned positions.
inline Energy shifted_pair_sum(const DnaSequence& q, std::size_t shift, const EnergyParams& params = {}) {
  if (shift == 0 || shift >= q.size()) throw DomainError("shift out of range");
  Energy sum = 0;
  for (std::size_t i = 0; i + shift < q.size(); ++i) sum += params.alpha(q[i], q[i + shift]);
  return sum;
}

inline RationalEnergy linear_energy(const DnaSequence& q, const LinearEnergyModel& model = {},
                                    const EnergyParams& params = {}) {
  if (model.depth() >= q.size()) {
    throw DomainError("linear energy depth " + std::to_string(model.depth()) +
                      " requires sequences longer than " + std::to_string(model.depth()));
  }
  RationalEnergy total = model.kappa();
  for (std::size_t l = 1; l <= model.depth(); ++l) {
    total += model.gammas()[l - 1] * shifted_pair_sum(q, l, params);
  }
  return total;
}

}  // namespace oligoforge
