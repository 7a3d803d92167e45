#pragma once

// DNA alphabet, Watson-Crick complementation, distances, shift metrics and
// the two-bit binary image of a DNA word.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oligoforge/errors.hpp"

namespace oligoforge {

// The enumerator values are the two-bit binary images A->00, T->01, C->10,
// G->11. The high bit marks G/C, and complementation flips the low bit.
enum class Base : std::uint8_t { A = 0b00, T = 0b01, C = 0b10, G = 0b11 };

inline constexpr std::array<Base, 4> kBases{Base::A, Base::C, Base::G, Base::T};

constexpr Base complement(Base b) noexcept {
  return static_cast<Base>(static_cast<std::uint8_t>(b) ^ 0b01);
}

constexpr bool is_gc(Base b) noexcept { return (static_cast<std::uint8_t>(b) & 0b10) != 0; }

constexpr char to_char(Base b) noexcept {
  switch (b) {
    case Base::A: return 'A';
    case Base::C: return 'C';
    case Base::G: return 'G';
    case Base::T: return 'T';
  }
  return '?';
}

// Accepts upper or lower case; anything else is rejected.
constexpr bool parse_base(char c, Base& out) noexcept {
  switch (c) {
    case 'A': case 'a': out = Base::A; return true;
    case 'C': case 'c': out = Base::C; return true;
    case 'G': case 'g': out = Base::G; return true;
    case 'T': case 't': out = Base::T; return true;
    default: return false;
  }
}

template <class R>
concept BaseRange = std::ranges::random_access_range<R> && std::ranges::sized_range<R> &&
                    std::same_as<std::ranges::range_value_t<R>, Base>;

/// Immutable non-empty word over {A,C,G,T}. Internal indices are 0-based;
/// reports print 1-based positions.
class DnaSequence {
 public:
  explicit DnaSequence(std::vector<Base> bases) : bases_(std::move(bases)) {
    if (bases_.empty()) throw DomainError("DNA sequence must have length >= 1");
  }

  template <BaseRange R>
  static DnaSequence from_bases(const R& r) {
    return DnaSequence(std::vector<Base>(std::ranges::begin(r), std::ranges::end(r)));
  }

  static DnaSequence parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty sequence");
    std::vector<Base> bases;
    bases.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      Base b{};
      if (!parse_base(text[i], b)) {
        throw ParseError("invalid base '" + std::string(1, text[i]) + "' at column " +
                         std::to_string(i + 1));
      }
      bases.push_back(b);
    }
    return DnaSequence(std::move(bases));
  }

  std::size_t size() const noexcept { return bases_.size(); }
  Base operator[](std::size_t i) const noexcept { return bases_[i]; }
  auto begin() const noexcept { return bases_.begin(); }
  auto end() const noexcept { return bases_.end(); }
  std::span<const Base> bases() const noexcept { return bases_; }

  // Bases [pos, pos + len).
  DnaSequence slice(std::size_t pos, std::size_t len) const {
    if (pos + len > size()) throw DomainError("slice out of range");
    return DnaSequence(std::vector<Base>(bases_.begin() + static_cast<std::ptrdiff_t>(pos),
                                         bases_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  std::string str() const {
    std::string s(size(), ' ');
    std::ranges::transform(bases_, s.begin(), to_char);
    return s;
  }

  friend bool operator==(const DnaSequence&, const DnaSequence&) = default;
  friend auto operator<=>(const DnaSequence&, const DnaSequence&) = default;

 private:
  std::vector<Base> bases_;
};

inline DnaSequence complement_sequence(const DnaSequence& q) {
  std::vector<Base> out(q.size());
  std::ranges::transform(q, out.begin(), [](Base b) { return complement(b); });
  return DnaSequence(std::move(out));
}

namespace detail {
template <BaseRange P, BaseRange R>
void require_equal_length(const P& p, const R& r) {
  if (std::ranges::size(p) != std::ranges::size(r)) {
    throw DomainError("sequence lengths differ: " + std::to_string(std::ranges::size(p)) +
                      " vs " + std::to_string(std::ranges::size(r)));
  }
}
}  // namespace detail

template <BaseRange P, BaseRange R>
std::size_t hamming_distance(const P& p, const R& r) {
  detail::require_equal_length(p, r);
  std::size_t d = 0;
  for (std::size_t i = 0; i < std::ranges::size(p); ++i) d += p[i] != r[i];
  return d;
}

/// d_WC(p, r) = |{i : p_i != complement(r_i)}| = d_H(p, complement(r)).
template <BaseRange P, BaseRange R>
std::size_t wc_distance(const P& p, const R& r) {
  detail::require_equal_length(p, r);
  std::size_t d = 0;
  for (std::size_t i = 0; i < std::ranges::size(p); ++i) d += p[i] != complement(r[i]);
  return d;
}

/// mu_i(q): number of positions l in [0, n-i) with q_l = complement(q_{l+i}).
template <BaseRange Q>
std::size_t mu(const Q& q, std::size_t shift) {
  const std::size_t n = std::ranges::size(q);
  if (shift >= n) {
    throw DomainError("shift " + std::to_string(shift) + " out of range for length " +
                      std::to_string(n));
  }
  std::size_t count = 0;
  for (std::size_t l = 0; l + shift < n; ++l) count += q[l] == complement(q[l + shift]);
  return count;
}

// Entry i holds mu_i(q), i = 0..n-1.
struct ShiftProfile {
  std::vector<std::size_t> mu;

  std::size_t size() const noexcept { return mu.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return mu[i]; }

  // max_{1 <= i <= depth} mu_i; depth is clamped to n-1.
  std::size_t max_shift_match(std::size_t depth) const noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i <= depth && i < mu.size(); ++i) best = std::max(best, mu[i]);
    return best;
  }
  std::size_t max_shift_match() const noexcept { return max_shift_match(mu.size()); }
};

template <BaseRange Q>
ShiftProfile shift_profile(const Q& q) {
  const std::size_t n = std::ranges::size(q);
  ShiftProfile p{std::vector<std::size_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) p.mu[i] = mu(q, i);
  return p;
}

template <BaseRange Q>
std::size_t gc_content(const Q& q) {
  return static_cast<std::size_t>(std::ranges::count_if(q, is_gc));
}

// ---------------------------------------------------------------------------
// Bit strings and the binary image.

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n) : bits_(n, 0) {}
  explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw DomainError("bit values must be 0 or 1");
    }
  }

  static BitString parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw ParseError("invalid bit '" + std::string(1, c) + "'");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool v) noexcept { bits_[i] = v ? 1 : 0; }

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::ranges::count(bits_, std::uint8_t{1}));
  }

  BitString operator~() const {
    BitString out(size());
    for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ^ 1;
    return out;
  }
  friend BitString operator^(const BitString& a, const BitString& b) {
    return zip(a, b, [](auto x, auto y) { return static_cast<std::uint8_t>(x ^ y); });
  }
  friend BitString operator&(const BitString& a, const BitString& b) {
    return zip(a, b, [](auto x, auto y) { return static_cast<std::uint8_t>(x & y); });
  }

  // out[j] = this[(j - k) mod n]
  BitString rotated_right(std::size_t k) const {
    BitString out(size());
    if (size() == 0) return out;
    for (std::size_t j = 0; j < size(); ++j) out.bits_[(j + k) % size()] = bits_[j];
    return out;
  }

  std::string str() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) s[i] = bits_[i] ? '1' : '0';
    return s;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  template <class Op>
  static BitString zip(const BitString& a, const BitString& b, Op op) {
    if (a.size() != b.size()) throw DomainError("bit string lengths differ");
    BitString out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.bits_[i] = op(a.bits_[i], b.bits_[i]);
    return out;
  }

  std::vector<std::uint8_t> bits_;
};

/// b(q) = b_0 b_1 ... b_{2n-1}; even = b_0 b_2 ..., odd = b_1 b_3 ...
struct BinaryImage {
  BitString even;
  BitString odd;

  BitString bits() const {
    BitString out(2 * even.size());
    for (std::size_t i = 0; i < even.size(); ++i) {
      out.set(2 * i, even[i]);
      out.set(2 * i + 1, odd[i]);
    }
    return out;
  }
};

template <BaseRange Q>
BinaryImage binary_image(const Q& q) {
  const std::size_t n = std::ranges::size(q);
  BinaryImage img{BitString(n), BitString(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto code = static_cast<std::uint8_t>(q[i]);
    img.even.set(i, (code & 0b10) != 0);
    img.odd.set(i, (code & 0b01) != 0);
  }
  return img;
}

// Inverse of binary_image: bit pair (even_i, odd_i) -> base.
inline DnaSequence decode(const BitString& even, const BitString& odd) {
  if (even.size() != odd.size()) throw DomainError("even/odd components differ in length");
  std::vector<Base> bases(even.size());
  for (std::size_t i = 0; i < even.size(); ++i) {
    bases[i] = static_cast<Base>((even[i] ? 0b10 : 0) | (odd[i] ? 0b01 : 0));
  }
  return DnaSequence(std::move(bases));
}

inline DnaSequence decode(const BinaryImage& img) { return decode(img.even, img.odd); }

/// d_WC via the binary images: n - w_H(~(e(p) ^ e(r)) & (o(p) ^ o(r))).
template <BaseRange P, BaseRange R>
std::size_t wc_distance_via_binary(const P& p, const R& r) {
  detail::require_equal_length(p, r);
  const auto bp = binary_image(p);
  const auto br = binary_image(r);
  const BitString sigma_e = bp.even ^ br.even;
  const BitString sigma_o = bp.odd ^ br.odd;
  return std::ranges::size(p) - (~sigma_e & sigma_o).weight();
}

// ---------------------------------------------------------------------------
// Plain-text sequence files: one sequence per line, '#' comments, trailing
// whitespace stripped, blank lines skipped.

struct SequenceRecord {
  std::size_t line;  // 1-based
  DnaSequence sequence;
};

inline std::vector<SequenceRecord> read_sequences(std::istream& in) {
  std::vector<SequenceRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back({lineno, DnaSequence::parse(line)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

}  // namespace oligoforge
