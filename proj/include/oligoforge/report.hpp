#pragma once

// Text, CSV and JSON renderings of folding tables, structures and code
// verification reports.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oligoforge/codegen.hpp"
#include "oligoforge/folding.hpp"
#include "oligoforge/seqcore.hpp"

namespace oligoforge {

namespace detail {
// Cell (i, j) as printed: '*' below the first sub-diagonal, else E_{i,j}.
inline std::string table_cell(const EnergyTable& e, std::size_t i, std::size_t j) {
  if (j + 1 < i) return "*";
  return std::to_string(e(i, j));
}
}  // namespace detail

/// Row/column base labels, '*' in the unused lower triangle, zeros on the
/// diagonal and first sub-diagonal.
inline std::string render_table_text(const EnergyTable& e, const DnaSequence& q) {
  const std::size_t n = e.size();
  std::size_t width = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) width = std::max(width, detail::table_cell(e, i, j).size());
  }
  width += 2;
  auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  std::ostringstream out;
  out << ' ';
  for (std::size_t j = 1; j <= n; ++j) out << pad(std::string(1, to_char(q[j - 1])));
  out << '\n';
  for (std::size_t i = 1; i <= n; ++i) {
    out << to_char(q[i - 1]);
    for (std::size_t j = 1; j <= n; ++j) out << pad(detail::table_cell(e, i, j));
    out << '\n';
  }
  return out.str();
}

inline std::string render_table_csv(const EnergyTable& e, const DnaSequence& q) {
  const std::size_t n = e.size();
  std::ostringstream out;
  for (std::size_t j = 1; j <= n; ++j) out << ',' << to_char(q[j - 1]);
  out << '\n';
  for (std::size_t i = 1; i <= n; ++i) {
    out << to_char(q[i - 1]);
    for (std::size_t j = 1; j <= n; ++j) out << ',' << detail::table_cell(e, i, j);
    out << '\n';
  }
  return out.str();
}

// Upper triangle as a JSON matrix; null below the first sub-diagonal.
inline nlohmann::json table_json(const EnergyTable& e) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= e.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 1; j <= e.size(); ++j) {
      if (j + 1 < i) {
        row.push_back(nullptr);
      } else {
        row.push_back(e(i, j));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Dot-bracket line followed by one "i j X-Y" line per pair (1-based).
inline std::string render_structure(const SecondaryStructure& s, const DnaSequence& q) {
  std::ostringstream out;
  out << "structure " << s.dot_bracket(q.size()) << '\n';
  for (const auto& p : s.pairs) {
    out << "pair " << p.i << ' ' << p.j << ' ' << to_char(q[p.i - 1]) << '-' << to_char(q[p.j - 1]) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

inline std::string render_verification_text(const VerificationReport& r) {
  const auto& p = r.properties;
  std::ostringstream out;
  out << "codewords       " << p.count << '\n';
  out << "distinct        " << p.distinct << '\n';
  out << "length          " << p.length << '\n';
  if (r.m) out << "m               " << *r.m << '\n';
  if (r.generator) out << "generator       " << r.generator->str() << '\n';
  out << "min_hamming     " << p.min_hamming << '\n';
  out << "gc_content      ";
  if (p.constant_gc()) {
    out << p.gc_min << " (constant)\n";
  } else {
    out << p.gc_min << ".." << p.gc_max << " (varies)\n";
  }
  out << "max_shift_match " << p.max_shift_match << '\n';
  const bool folded = !r.codewords.empty() && r.codewords.front().energy.has_value();
  if (folded) {
    out << "structured      " << r.structured_count() << " of " << r.codewords.size() << " at threshold "
        << r.threshold << '\n';
  }
  for (const auto& c : r.checks) {
    out << "check " << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << "  " << c.detail << '\n';
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  out << "verdict " << (r.passed() ? "PASS" : "FAIL") << '\n';
  out << "\n#\tsequence\tgc\tmu_1\tmax_mu\tenergy\tstructure\n";
  for (std::size_t k = 0; k < r.codewords.size(); ++k) {
    const auto& c = r.codewords[k];
    out << k + 1 << '\t' << c.sequence.str() << '\t' << c.gc << '\t'
        << (c.profile.size() > 1 ? std::to_string(c.profile[1]) : "-") << '\t' << c.profile.max_shift_match()
        << '\t' << (c.energy ? std::to_string(*c.energy) : "-") << '\t'
        << (c.energy ? (c.structured ? "yes" : "no") : "-") << '\n';
  }
  return out.str();
}

/// Metadata sidecar for an exported code.
inline nlohmann::json verification_json(const VerificationReport& r) {
  const auto& p = r.properties;
  nlohmann::json j;
  j["m"] = r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr);
  j["generator"] = r.generator ? nlohmann::json(r.generator->str()) : nlohmann::json(nullptr);
  j["count"] = p.count;
  j["length"] = p.length;
  j["min_distance"] = p.min_hamming;
  j["gc_content"] = p.constant_gc() ? nlohmann::json(p.gc_min) : nlohmann::json(nullptr);
  j["gc_range"] = {p.gc_min, p.gc_max};
  j["max_mu"] = p.max_shift_match;
  j["threshold"] = r.threshold;
  j["passed"] = r.passed();
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  auto words = nlohmann::json::array();
  for (const auto& c : r.codewords) {
    nlohmann::json w{{"sequence", c.sequence.str()}, {"gc", c.gc}, {"mu", c.profile.mu},
                     {"max_mu", c.profile.max_shift_match()}};
    w["energy"] = c.energy ? nlohmann::json(*c.energy) : nlohmann::json(nullptr);
    w["structured"] = c.energy ? nlohmann::json(c.structured) : nlohmann::json(nullptr);
    words.push_back(std::move(w));
  }
  j["codewords"] = std::move(words);
  return j;
}

}  // namespace oligoforge
