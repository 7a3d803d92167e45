#pragma once

// DNA codes from cyclic simplex codes: every ordered pair (e, o) of nonzero
// simplex codewords becomes the DNA word whose binary image has even part e
// and odd part o. Such codes have (2^m - 1)^2 words, constant GC-content
// 2^{m-1}, and mu_i <= 2^{m-2} for every word and shift.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oligoforge/errors.hpp"
#include "oligoforge/folding.hpp"
#include "oligoforge/parallel.hpp"
#include "oligoforge/seqcore.hpp"

namespace oligoforge {

inline constexpr std::size_t kMinSimplexDimension = 2;
inline constexpr std::size_t kMaxDefaultSimplexDimension = 8;
inline constexpr std::size_t kMaxSimplexDimension = 16;

namespace detail {

// Feedback taps c_i of x^m + sum c_i x^i (i < m), primitive over GF(2).
inline std::vector<std::size_t> default_taps(std::size_t m) {
  switch (m) {
    case 2: return {1, 0};        // x^2 + x + 1
    case 3: return {2, 0};        // x^3 + x^2 + 1
    case 4: return {3, 0};        // x^4 + x^3 + 1
    case 5: return {3, 0};        // x^5 + x^3 + 1
    case 6: return {5, 0};        // x^6 + x^5 + 1
    case 7: return {6, 0};        // x^7 + x^6 + 1
    case 8: return {6, 5, 4, 0};  // x^8 + x^6 + x^5 + x^4 + 1
    default: throw DomainError("no default generator for m = " + std::to_string(m));
  }
}

}  // namespace detail

/// One period of the maximal-length sequence s_{k+m} = sum_i c_i s_{k+i},
/// seeded with m ones. For m = 3 this is 1110100.
inline BitString default_generator(std::size_t m) {
  const auto taps = detail::default_taps(m);
  const std::size_t n = (std::size_t{1} << m) - 1;
  std::vector<std::uint8_t> s(n, 0);
  for (std::size_t k = 0; k < m; ++k) s[k] = 1;
  for (std::size_t k = 0; k + m < n; ++k) {
    std::uint8_t v = 0;
    for (auto t : taps) v ^= s[k + t];
    s[k + m] = v;
  }
  return BitString(std::move(s));
}

/// Failure reason, or nullopt when the n cyclic shifts of `generator`
/// together with zero form a simplex code of dimension m.
inline std::optional<std::string> simplex_violation(std::size_t m, const BitString& generator) {
  if (m < kMinSimplexDimension || m > kMaxSimplexDimension) return "dimension m out of range";
  const std::size_t n = (std::size_t{1} << m) - 1;
  const std::size_t weight = std::size_t{1} << (m - 1);
  const std::size_t overlap = std::size_t{1} << (m - 2);
  if (generator.size() != n) {
    return "generator length " + std::to_string(generator.size()) + " != 2^m - 1 = " + std::to_string(n);
  }
  if (generator.weight() != weight) {
    return "generator weight " + std::to_string(generator.weight()) + " != 2^(m-1) = " + std::to_string(weight);
  }
  std::vector<BitString> shifts;
  shifts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) shifts.push_back(generator.rotated_right(k));
  const std::set<BitString> members(shifts.begin(), shifts.end());
  if (members.size() != n) return "cyclic shifts of the generator are not distinct";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!members.contains(shifts[a] ^ shifts[b])) {
        return "shifts " + std::to_string(a) + " and " + std::to_string(b) + " are not closed under XOR";
      }
      if ((shifts[a] & shifts[b]).weight() != overlap) {
        return "shifts " + std::to_string(a) + " and " + std::to_string(b) + " do not intersect in 2^(m-2) positions";
      }
    }
  }
  return std::nullopt;
}

/// The nonzero codewords of a cyclic simplex code, in shift order:
/// codeword k is the generator rotated right by k.
class SimplexCode {
 public:
  SimplexCode(std::size_t m, BitString generator) : m_(m), generator_(std::move(generator)) {
    if (auto why = simplex_violation(m_, generator_)) {
      throw InvalidGenerator("not a simplex generator: " + *why);
    }
    for (std::size_t k = 0; k < length(); ++k) words_.push_back(generator_.rotated_right(k));
  }

  std::size_t dimension() const noexcept { return m_; }
  std::size_t length() const noexcept { return (std::size_t{1} << m_) - 1; }
  const BitString& generator() const noexcept { return generator_; }
  const std::vector<BitString>& codewords() const noexcept { return words_; }

 private:
  std::size_t m_;
  BitString generator_;
  std::vector<BitString> words_;
};

inline SimplexCode simplex_code(std::size_t m, std::optional<BitString> generator = std::nullopt) {
  if (m < kMinSimplexDimension) throw DomainError("simplex dimension must be >= 2");
  return SimplexCode(m, generator ? std::move(*generator) : default_generator(m));
}

// ---------------------------------------------------------------------------

struct CodeProperties {
  std::size_t count = 0;
  std::size_t length = 0;
  std::size_t distinct = 0;
  std::size_t min_hamming = 0;  // 0 when fewer than two words
  std::size_t gc_min = 0;
  std::size_t gc_max = 0;
  std::size_t max_shift_match = 0;  // max over words and shifts 1..n-1

  bool constant_gc() const noexcept { return gc_min == gc_max; }
  friend bool operator==(const CodeProperties&, const CodeProperties&) = default;
};

namespace detail {

// Each word as GC mask and odd-bit mask, 64 positions per block.
struct PackedWord {
  std::vector<std::uint64_t> even, odd;
};

inline PackedWord pack(const DnaSequence& q) {
  const std::size_t blocks = (q.size() + 63) / 64;
  PackedWord p{std::vector<std::uint64_t>(blocks, 0), std::vector<std::uint64_t>(blocks, 0)};
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto code = static_cast<std::uint8_t>(q[i]);
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (code & 0b10) p.even[i / 64] |= bit;
    if (code & 0b01) p.odd[i / 64] |= bit;
  }
  return p;
}

inline std::size_t packed_hamming(const PackedWord& a, const PackedWord& b) {
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.even.size(); ++k) {
    d += static_cast<std::size_t>(std::popcount((a.even[k] ^ b.even[k]) | (a.odd[k] ^ b.odd[k])));
  }
  return d;
}

}  // namespace detail

/// Minimum pairwise Hamming distance; O(N^2) word pairs, parallel over rows.
inline std::size_t min_pairwise_hamming(const std::vector<DnaSequence>& words) {
  if (words.size() < 2) return 0;
  std::vector<detail::PackedWord> packed;
  packed.reserve(words.size());
  for (const auto& w : words) packed.push_back(detail::pack(w));
  std::vector<std::size_t> row_min(words.size(), std::numeric_limits<std::size_t>::max());
  detail::parallel_for(words.size(), [&](std::size_t a) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t b = a + 1; b < packed.size(); ++b) best = std::min(best, detail::packed_hamming(packed[a], packed[b]));
    row_min[a] = best;
  });
  return *std::ranges::min_element(row_min);
}

inline CodeProperties compute_properties(const std::vector<DnaSequence>& words) {
  CodeProperties p;
  p.count = words.size();
  if (words.empty()) return p;
  p.length = words.front().size();
  for (const auto& w : words) {
    if (w.size() != p.length) throw DomainError("code words differ in length");
  }
  p.distinct = std::set<DnaSequence>(words.begin(), words.end()).size();
  p.min_hamming = min_pairwise_hamming(words);
  p.gc_min = std::numeric_limits<std::size_t>::max();
  for (const auto& w : words) {
    const auto gc = gc_content(w);
    p.gc_min = std::min(p.gc_min, gc);
    p.gc_max = std::max(p.gc_max, gc);
    p.max_shift_match = std::max(p.max_shift_match, shift_profile(w).max_shift_match());
  }
  return p;
}

/// A set of equal-length DNA words with recomputed metadata. Simplex-built
/// codes also carry their dimension and generator.
class DnaCode {
 public:
  explicit DnaCode(std::vector<DnaSequence> words, std::optional<std::size_t> m = std::nullopt,
                   std::optional<BitString> generator = std::nullopt)
      : words_(std::move(words)), m_(m), generator_(std::move(generator)),
        properties_(compute_properties(words_)) {}

  const std::vector<DnaSequence>& codewords() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::optional<std::size_t> dimension() const noexcept { return m_; }
  const std::optional<BitString>& generator() const noexcept { return generator_; }
  const CodeProperties& properties() const noexcept { return properties_; }

 private:
  std::vector<DnaSequence> words_;
  std::optional<std::size_t> m_;
  std::optional<BitString> generator_;
  CodeProperties properties_;
};

/// All (2^m - 1)^2 words decode(e, o), ordered by (index of e, index of o).
inline DnaCode build_dna_code(const SimplexCode& code) {
  std::vector<DnaSequence> words;
  words.reserve(code.length() * code.length());
  for (const auto& e : code.codewords()) {
    for (const auto& o : code.codewords()) words.push_back(decode(e, o));
  }
  return DnaCode(std::move(words), code.dimension(), code.generator());
}

// ---------------------------------------------------------------------------
// Verification

struct CodewordReport {
  DnaSequence sequence;
  std::size_t gc = 0;
  ShiftProfile profile;
  std::optional<Energy> energy;  // absent when folding was skipped
  bool structured = false;
};

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  CodeProperties properties;
  std::optional<std::size_t> m;
  std::optional<BitString> generator;
  Energy threshold = kDefaultStructureThreshold;
  std::vector<CodewordReport> codewords;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const noexcept {
    return std::ranges::all_of(checks, [](const Check& c) { return c.passed; });
  }
  std::size_t structured_count() const noexcept {
    return static_cast<std::size_t>(std::ranges::count_if(codewords, [](const auto& c) { return c.structured; }));
  }
};

struct VerifyOptions {
  EnergyParams params{};
  Energy threshold = kDefaultStructureThreshold;
  bool fold = true;
};

// n = 2^m - 1 -> m, for lengths that fit a simplex code.
inline std::optional<std::size_t> simplex_dimension_for_length(std::size_t n) {
  if (n < 3 || !std::has_single_bit(n + 1)) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(n + 1));
}

/// Recomputes every property from the words themselves and checks them
/// against the bounds implied by the code's dimension m, when known.
inline VerificationReport verify_code(const DnaCode& code, const VerifyOptions& opts = {}) {
  VerificationReport r;
  r.properties = compute_properties(code.codewords());
  r.m = code.dimension();
  r.generator = code.generator();
  r.threshold = opts.threshold;

  std::vector<std::optional<CodewordReport>> slots(code.size());
  detail::parallel_for(code.size(), [&](std::size_t k) {
    const auto& q = code.codewords()[k];
    CodewordReport c{q, gc_content(q), shift_profile(q), std::nullopt, false};
    if (opts.fold) {
      c.energy = min_free_energy(q, opts.params);
      c.structured = *c.energy <= opts.threshold;
    }
    slots[k] = std::move(c);
  });
  r.codewords.reserve(slots.size());
  for (auto& s : slots) r.codewords.push_back(std::move(*s));

  const auto& p = r.properties;
  r.checks.push_back({"distinct", p.distinct == p.count,
                      std::to_string(p.distinct) + " distinct of " + std::to_string(p.count)});
  r.checks.push_back({"constant_gc", p.constant_gc(),
                      "GC-content range [" + std::to_string(p.gc_min) + ", " + std::to_string(p.gc_max) + "]"});

  if (r.m) {
    const std::size_t m = *r.m;
    const std::size_t n = (std::size_t{1} << m) - 1;
    const std::size_t expected_size = n * n;
    const std::size_t gc = std::size_t{1} << (m - 1);
    const std::size_t bound = std::size_t{1} << (m - 2);
    r.checks.push_back({"size", p.count == expected_size,
                        std::to_string(p.count) + " == (2^m-1)^2 = " + std::to_string(expected_size)});
    r.checks.push_back({"length", p.count == 0 || p.length == n,
                        std::to_string(p.length) + " == 2^m-1 = " + std::to_string(n)});
    r.checks.push_back({"gc_value", p.count == 0 || (p.gc_min == gc && p.gc_max == gc),
                        "GC-content == 2^(m-1) = " + std::to_string(gc)});
    r.checks.push_back({"shift_bound", p.max_shift_match <= bound,
                        "max mu_i = " + std::to_string(p.max_shift_match) + " <= 2^(m-2) = " + std::to_string(bound)});
    r.notes.push_back("the underlying simplex code has constant pairwise distance 2^(m-1) = " +
                      std::to_string(gc) + "; the shift bound rests on the pairwise support intersection 2^(m-2) = " +
                      std::to_string(bound));
  }
  if (opts.fold) {
    r.notes.push_back("energies are Nussinov minimum free energies with alpha(A,T) = " +
                      std::to_string(opts.params.at()) + ", alpha(G,C) = " + std::to_string(opts.params.gc()) +
                      "; structure means energy <= " + std::to_string(opts.threshold));
  }
  return r;
}

}  // namespace oligoforge
