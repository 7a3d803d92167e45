#pragma once

// Command-line front end: fold, screen, enumerate, gf, count, construct and
// verify over plain-text sequence files. Exit codes: 0 success, 1 usage
// error, 2 data/parse error, 3 verification failure.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oligoforge/codegen.hpp"
#include "oligoforge/enumeration.hpp"
#include "oligoforge/errors.hpp"
#include "oligoforge/folding.hpp"
#include "oligoforge/report.hpp"
#include "oligoforge/seqcore.hpp"

namespace oligoforge::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kVerificationFailed = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultShiftDepth = 2;
inline constexpr std::size_t kDefaultMaxLength = 10;
inline constexpr std::size_t kDefaultDimension = 3;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string log;
  std::string json_path;
  std::string report_path;
  std::string format = "text";

  std::optional<std::size_t> s;  // shift depth; per-command default
  std::size_t n = kDefaultMaxLength;
  std::size_t m = kDefaultDimension;
  std::optional<std::size_t> m_override;  // verify: explicit dimension
  std::optional<std::size_t> w;
  std::optional<Energy> threshold;
  Energy alpha_at = -1;
  Energy alpha_gc = -2;
  std::optional<std::string> generator;
  bool oracle = false;
  bool no_fold = false;

  // enumerate
  bool mu1 = false;
  bool gc = false;

  // screen
  std::optional<std::size_t> max_mu;
  std::optional<std::size_t> gc_min;
  std::optional<std::size_t> gc_max;
  std::optional<std::string> min_linear;
  std::string kappa = "0";
  std::string gammas = "1,1/2,1/4,1/8";

  // count
  std::string predicate = "shift";
  std::optional<std::size_t> match;

  EnergyParams params() const { return EnergyParams(alpha_at, alpha_gc); }
};

// ---------------------------------------------------------------------------
// Small parsing helpers

inline std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

/// "3", "-7/2" or "0.25".
inline RationalEnergy parse_rational(const std::string& text) {
  const std::string t = trim(text);
  auto parse_int = [&](std::string_view v) {
    std::int64_t x = 0;
    const auto* first = v.data();
    if (!v.empty() && v.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || first == v.data() + v.size()) {
      throw ParseError("invalid number '" + text + "'");
    }
    return x;
  };
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const auto den = parse_int(std::string_view(t).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return {parse_int(std::string_view(t).substr(0, slash)), den};
  }
  if (const auto dot = t.find('.'); dot != std::string::npos) {
    const std::string frac = t.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) throw ParseError("invalid number '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string whole = t.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t ip = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    const std::int64_t fp = parse_int(frac);
    const std::int64_t mag = (ip < 0 ? -ip : ip) * den + fp;
    return {negative ? -mag : mag, den};
  }
  return {parse_int(t), 1};
}

inline std::string to_string(const RationalEnergy& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::vector<RationalEnergy> parse_rational_list(const std::string& text) {
  std::vector<RationalEnergy> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

/// Flat key=value lines; '#' comments and blank lines ignored.
inline std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// I/O helpers

inline std::vector<SequenceRecord> read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read input file '" + path + "'");
  return read_sequences(in);
}

// Runs `write` against the file at `path`, or against `fallback` when path is empty.
inline void write_to(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  write(f);
  if (!f) throw IoError("write failed for '" + path + "'");
}

/// Rows of string cells rendered as TSV/text, CSV or a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> trailer;  // '#' comment lines after the rows (text formats only)

  void render(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      auto arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj;
        for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = json_cell(row[k]);
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      return;
    }
    const char sep = format == "csv" ? ',' : '\t';
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? std::string(1, sep) : "") << cells[k];
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    for (const auto& t : trailer) out << "# " << t << '\n';
  }

 private:
  static nlohmann::json json_cell(const std::string& cell) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec == std::errc() && ptr == cell.data() + cell.size() && !cell.empty()) return v;
    return cell;
  }
};

inline std::string big(const BigInt& v) { return v.str(); }

inline std::string fixed(long double v, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << std::fixed << v;
  return s.str();
}

inline std::string sci(long double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_fold(const RunConfig& cfg, std::ostream& out) {
  const auto records = read_input(cfg.input);
  const auto params = cfg.params();
  const Energy threshold = cfg.threshold.value_or(kDefaultStructureThreshold);
  write_to(cfg.output, out, [&](std::ostream& o) {
    auto results = nlohmann::json::array();
    for (std::size_t k = 0; k < records.size(); ++k) {
      const auto& q = records[k].sequence;
      const auto table = nussinov_table(q, params);
      const auto structure = traceback(table, q, params);
      const Energy energy = table.min_free_energy();
      const bool structured = energy <= threshold;
      if (cfg.format == "json") {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& p : structure.pairs) pairs.push_back({p.i, p.j});
        results.push_back({{"line", records[k].line},
                           {"sequence", q.str()},
                           {"energy", energy},
                           {"table", table_json(table)},
                           {"dot_bracket", structure.dot_bracket(q.size())},
                           {"pairs", pairs},
                           {"structure", structured}});
      } else if (cfg.format == "csv" || cfg.format == "tsv") {
        o << "# " << q.str() << '\n' << render_table_csv(table, q);
        o << "# energy " << energy << '\n';
        o << "# structure " << structure.dot_bracket(q.size()) << '\n';
      } else {
        if (k) o << '\n';
        o << "sequence " << q.str() << " (line " << records[k].line << ")\n";
        o << render_table_text(table, q);
        o << "energy " << energy << '\n';
        o << render_structure(structure, q);
        o << "verdict " << (structured ? "structure" : "no structure") << " (threshold " << threshold << ")\n";
      }
    }
    if (cfg.format == "json") o << results.dump(2) << '\n';
  });
  return kOk;
}

inline int cmd_screen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto records = read_input(cfg.input);
  const auto params = cfg.params();
  std::optional<std::size_t> gc_min = cfg.gc_min, gc_max = cfg.gc_max;
  if (cfg.w) gc_min = gc_max = cfg.w;
  std::optional<RationalEnergy> min_linear;
  if (cfg.min_linear) min_linear = parse_rational(*cfg.min_linear);
  const LinearEnergyModel model(parse_rational(cfg.kappa), parse_rational_list(cfg.gammas));

  std::ostringstream accepted, rejected;
  for (const auto& rec : records) {
    const auto& q = rec.sequence;
    std::vector<std::string> reasons;
    if (cfg.max_mu) {
      const auto profile = shift_profile(q);
      const std::size_t depth = cfg.s.value_or(q.size());
      for (std::size_t i = 1; i <= depth && i < q.size(); ++i) {
        if (profile[i] > *cfg.max_mu) {
          reasons.push_back("mu_" + std::to_string(i) + " " + std::to_string(profile[i]));
          break;
        }
      }
    }
    const std::size_t gc = gc_content(q);
    if ((gc_min && gc < *gc_min) || (gc_max && gc > *gc_max)) reasons.push_back("GC " + std::to_string(gc));
    if (cfg.threshold) {
      const Energy e = min_free_energy(q, params);
      if (e <= *cfg.threshold) reasons.push_back("energy " + std::to_string(e));
    }
    if (min_linear && model.depth() < q.size()) {
      const auto e = linear_energy(q, model, params);
      if (e < *min_linear) reasons.push_back("linear " + to_string(e));
    }
    if (reasons.empty()) {
      accepted << q.str() << '\n';
    } else {
      rejected << rec.line << '\t' << q.str() << '\t';
      for (std::size_t k = 0; k < reasons.size(); ++k) rejected << (k ? "; " : "") << reasons[k];
      rejected << '\n';
    }
  }
  write_to(cfg.output, out, [&](std::ostream& o) { o << accepted.str(); });
  write_to(cfg.log, err, [&](std::ostream& o) { o << rejected.str(); });
  return kOk;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const std::size_t cap = oracle_cap_from_env();
  Table t;
  bool agree = true;
  auto oracle_cells = [&](std::vector<std::string>& row, const BigInt& value, const BigInt& oracle) {
    row.push_back(big(oracle));
    row.push_back(value == oracle ? "yes" : "no");
    agree = agree && value == oracle;
  };
  if (cfg.mu1 && cfg.gc) throw UsageError("--mu1 and --gc are exclusive");
  if (cfg.mu1) {
    t.header = {"n", "m", "count"};
    for (std::size_t m = 0; m < cfg.n; ++m) {
      const BigInt v = count_mu1(cfg.n, m);
      std::vector<std::string> row{std::to_string(cfg.n), std::to_string(m), big(v)};
      if (cfg.oracle) oracle_cells(row, v, count_brute_force(cfg.n, predicates::mu1_equals(m), cap));
      t.rows.push_back(std::move(row));
    }
  } else if (cfg.gc) {
    t.header = {"n", "w", "count"};
    const auto phi = gj_coefficients(cfg.n);
    for (std::size_t n = 1; n <= cfg.n; ++n) {
      for (std::size_t w = 0; w <= n; ++w) {
        if (cfg.w && *cfg.w != w) continue;
        const BigInt v = phi.coeff(n, w);
        std::vector<std::string> row{std::to_string(n), std::to_string(w), big(v)};
        if (cfg.oracle) oracle_cells(row, v, count_brute_force(n, predicates::mu1_zero_with_gc(w), cap));
        t.rows.push_back(std::move(row));
      }
    }
  } else {
    const std::size_t s = cfg.s.value_or(kDefaultShiftDepth);
    t.header = {"n", "g_" + std::to_string(s) + "(n)"};
    const auto counts = g_table(s, cfg.n);
    for (std::size_t n = 1; n <= cfg.n; ++n) {
      std::vector<std::string> row{std::to_string(n), big(counts.at(n))};
      if (cfg.oracle) oracle_cells(row, counts.at(n), count_brute_force(n, predicates::no_shift_matches(s), cap));
      t.rows.push_back(std::move(row));
    }
  }
  if (cfg.oracle) {
    t.header.push_back("oracle");
    t.header.push_back("match");
    t.trailer.push_back(std::string("oracle agreement: ") + (agree ? "yes" : "no"));
  }
  write_to(cfg.output, out, [&](std::ostream& o) { t.render(o, cfg.format); });
  return agree ? kOk : kVerificationFailed;
}

inline int cmd_gf(const RunConfig& cfg, std::ostream& out) {
  const std::size_t s = cfg.s.value_or(kDefaultShiftDepth);
  const auto series = g_series(s, cfg.n);
  const auto recursion = g_table(s, cfg.n);
  Table t;
  t.header = {"n", "coefficient", "recursion", "match"};
  bool agree = true;
  for (std::size_t n = 1; n <= cfg.n; ++n) {
    const bool eq = series.at(n) == recursion.at(n);
    agree = agree && eq;
    t.rows.push_back({std::to_string(n), big(series.at(n)), big(recursion.at(n)), eq ? "yes" : "no"});
  }
  t.trailer.push_back("G_" + std::to_string(s) + "(z) = 4 (z^" + std::to_string(s - 1) + " + ... + 1) / (z^" +
                      std::to_string(s) + " - 2 z^" + std::to_string(s - 1) + " - 1)");
  if (s >= 2) {
    const auto g = dominant_root(s);
    const std::size_t last = cfg.n;
    t.trailer.push_back("s " + std::to_string(s));
    t.trailer.push_back("rho_s " + fixed(g.rho, 12));
    t.trailer.push_back("residual " + sci(g.residual));
    if (last >= 1) {
      t.trailer.push_back("ratio g(" + std::to_string(last + 1) + ")/g(" + std::to_string(last) + ") " +
                          fixed(growth_check(s, last), 12));
      t.trailer.push_back("beta_estimate " + fixed(beta_estimate(s, last, g.rho), 12));
    }
  } else {
    t.trailer.push_back("s 1: g_1(n) = 4 * 3^(n-1), growth ratio 3");
  }
  write_to(cfg.output, out, [&](std::ostream& o) { t.render(o, cfg.format); });
  return agree ? kOk : kVerificationFailed;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const std::size_t cap = oracle_cap_from_env();
  const std::size_t s = cfg.s.value_or(kDefaultShiftDepth);
  BigInt count;
  std::string label;
  const auto& p = cfg.predicate;
  if (p == "shift") {
    count = count_brute_force(cfg.n, predicates::no_shift_matches(s), cap);
    label = "mu_1..mu_" + std::to_string(s) + " = 0";
  } else if (p == "complement-free") {
    count = count_brute_force(cfg.n, predicates::complement_free(), cap);
    label = "no complementary pair";
  } else if (p == "mu1") {
    if (!cfg.match) throw UsageError("--predicate mu1 needs --match");
    count = count_brute_force(cfg.n, predicates::mu1_equals(*cfg.match), cap);
    label = "mu_1 = " + std::to_string(*cfg.match);
  } else if (p == "gc" || p == "mu1-gc") {
    if (!cfg.w) throw UsageError("--predicate " + p + " needs -w");
    if (p == "gc") {
      count = count_brute_force(cfg.n, predicates::gc_equals(*cfg.w), cap);
      label = "GC = " + std::to_string(*cfg.w);
    } else {
      count = count_brute_force(cfg.n, predicates::mu1_zero_with_gc(*cfg.w), cap);
      label = "mu_1 = 0, GC = " + std::to_string(*cfg.w);
    }
  } else {
    throw UsageError("unknown predicate '" + p + "'");
  }
  Table t{{"n", "predicate", "count"}, {{std::to_string(cfg.n), label, big(count)}}, {}};
  write_to(cfg.output, out, [&](std::ostream& o) { t.render(o, cfg.format); });
  return kOk;
}

inline void write_code_file(std::ostream& o, const DnaCode& code) {
  o << "# DNA code";
  if (code.dimension()) o << " m=" << *code.dimension();
  if (code.generator()) o << " generator=" << code.generator()->str();
  o << " words=" << code.size() << '\n';
  for (const auto& w : code.codewords()) o << w.str() << '\n';
}

inline int emit_verification(const RunConfig& cfg, const VerificationReport& report, std::ostream& out,
                             std::ostream& err, const std::string& report_path, const std::string& json_path,
                             bool report_to_err) {
  if (!json_path.empty()) {
    write_to(json_path, out, [&](std::ostream& o) { o << verification_json(report).dump(2) << '\n'; });
  }
  std::ostream& fallback = report_to_err ? err : out;
  if (cfg.format == "json" && report_path.empty() && !report_to_err) {
    out << verification_json(report).dump(2) << '\n';
  } else {
    write_to(report_path, fallback, [&](std::ostream& o) { o << render_verification_text(report); });
  }
  return report.passed() ? kOk : kVerificationFailed;
}

inline VerifyOptions verify_options(const RunConfig& cfg) {
  return {cfg.params(), cfg.threshold.value_or(kDefaultStructureThreshold), !cfg.no_fold};
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<BitString> generator;
  if (cfg.generator) generator = BitString::parse(*cfg.generator);
  if (!generator && cfg.m > kMaxDefaultSimplexDimension) {
    throw UsageError("no default generator for m > " + std::to_string(kMaxDefaultSimplexDimension) +
                     "; pass --generator");
  }
  const auto simplex = simplex_code(cfg.m, generator);
  const auto code = build_dna_code(simplex);
  const auto report = verify_code(code, verify_options(cfg));

  write_to(cfg.output, out, [&](std::ostream& o) { write_code_file(o, code); });
  std::string json_path = cfg.json_path;
  std::string report_path = cfg.report_path;
  if (!cfg.output.empty()) {
    if (json_path.empty()) json_path = cfg.output + ".json";
    if (report_path.empty()) report_path = cfg.output + ".report.txt";
  }
  return emit_verification(cfg, report, out, err, report_path, json_path, cfg.output.empty() && report_path.empty());
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto records = read_input(cfg.input);
  std::vector<DnaSequence> words;
  words.reserve(records.size());
  for (const auto& r : records) words.push_back(r.sequence);
  std::optional<std::size_t> m = cfg.m_override;
  if (!m && !words.empty()) m = simplex_dimension_for_length(words.front().size());
  std::optional<BitString> generator;
  if (cfg.generator) generator = BitString::parse(*cfg.generator);
  const DnaCode code(std::move(words), m, generator);
  const auto report = verify_code(code, verify_options(cfg));
  return emit_verification(cfg, report, out, err, cfg.output, cfg.json_path, false);
}

// ---------------------------------------------------------------------------
// Argument parsing

inline void add_energy_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha-at", cfg.alpha_at, "Pair energy alpha(A,T)")->capture_default_str()->check(
      CLI::Range(std::numeric_limits<Energy>::min(), Energy{0}));
  sub->add_option("--alpha-gc", cfg.alpha_gc, "Pair energy alpha(G,C)")->capture_default_str()->check(
      CLI::Range(std::numeric_limits<Energy>::min(), Energy{0}));
}

inline void add_format_option(CLI::App* sub, RunConfig& cfg, std::vector<std::string> allowed) {
  sub->add_option("--format", cfg.format, "Output format")->capture_default_str()->check(CLI::IsMember(allowed));
}

inline void add_threshold_option(CLI::App* sub, RunConfig& cfg, const std::string& help) {
  sub->add_option("--threshold", cfg.threshold, help)->check(CLI::Range(std::numeric_limits<Energy>::min(), Energy{0}));
}

inline void build_app(CLI::App& app, RunConfig& cfg) {
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", "oligoforge 1.0");
  app.footer(
      "Every subcommand also accepts --config FILE (flat key=value lines naming long options, e.g.\n"
      "threshold=-3). Precedence: command-line flags > config file > defaults.\n"
      "OLIGOFORGE_ORACLE_CAP overrides the brute-force length cap (default 12).\n"
      "Exit codes: 0 ok, 1 usage error, 2 data/parse error, 3 verification failure.");

  auto* fold = app.add_subcommand("fold", "Nussinov energy table, minimum free energy and traceback per sequence");
  fold->add_option("--input", cfg.input, "Sequence file")->required();
  fold->add_option("--output", cfg.output, "Report file (default stdout)");
  add_threshold_option(fold, cfg, "Structure verdict threshold (default -2)");
  add_energy_options(fold, cfg);
  add_format_option(fold, cfg, {"text", "csv", "tsv", "json"});

  auto* screen = app.add_subcommand("screen", "Filter sequences by shift, GC-content and energy constraints");
  screen->add_option("--input", cfg.input, "Sequence file")->required();
  screen->add_option("--output", cfg.output, "Accepted sequences (default stdout)");
  screen->add_option("--log", cfg.log, "Rejection log (default stderr)");
  screen->add_option("--max-mu", cfg.max_mu, "Reject when mu_i exceeds this for some 1 <= i <= s");
  screen->add_option("-s", cfg.s, "Shift depth for --max-mu (default all shifts)")->check(CLI::PositiveNumber);
  screen->add_option("-w", cfg.w, "Required GC-content (sets --gc-min and --gc-max)");
  screen->add_option("--gc-min", cfg.gc_min, "Minimum GC-content");
  screen->add_option("--gc-max", cfg.gc_max, "Maximum GC-content");
  add_threshold_option(screen, cfg, "Reject when the minimum free energy is <= this (off by default)");
  screen->add_option("--min-linear", cfg.min_linear, "Reject when the linear energy model is below this (rational)");
  screen->add_option("--kappa", cfg.kappa, "Linear model offset kappa")->capture_default_str();
  screen->add_option("--gammas", cfg.gammas, "Linear model weights gamma_1,...,gamma_l (non-increasing)")
      ->capture_default_str();
  add_energy_options(screen, cfg);

  auto* enumerate = app.add_subcommand("enumerate", "Count tables g_s(n), mu_1 = m counts, or (n, GC) counts");
  enumerate->add_option("-s", cfg.s, "Shift depth (default 2)")->check(CLI::PositiveNumber);
  enumerate->add_option("-n", cfg.n, "Maximum length (or the length, with --mu1)")->capture_default_str()->check(
      CLI::PositiveNumber);
  enumerate->add_option("-w", cfg.w, "Only this GC-content (with --gc)");
  enumerate->add_flag("--mu1", cfg.mu1, "Count words of length n by mu_1 = m");
  enumerate->add_flag("--gc", cfg.gc, "Count mu_1 = 0 words by length and GC-content");
  enumerate->add_flag("--oracle", cfg.oracle, "Append brute-force oracle columns and an agreement verdict");
  enumerate->add_option("--output", cfg.output, "Output file (default stdout)");
  add_format_option(enumerate, cfg, {"text", "tsv", "csv", "json"});

  auto* gf = app.add_subcommand("gf", "Generating-function expansion of G_s(z) and the growth root rho_s");
  gf->add_option("-s", cfg.s, "Shift depth (default 2)")->check(CLI::PositiveNumber);
  gf->add_option("-n", cfg.n, "Number of coefficients")->capture_default_str()->check(CLI::PositiveNumber);
  gf->add_option("--output", cfg.output, "Output file (default stdout)");
  add_format_option(gf, cfg, {"text", "tsv", "csv", "json"});

  auto* count = app.add_subcommand("count", "Exhaustive count of length-n words satisfying a predicate");
  count->add_option("-n", cfg.n, "Word length")->capture_default_str()->check(CLI::PositiveNumber);
  count->add_option("--predicate", cfg.predicate, "shift | complement-free | mu1 | gc | mu1-gc")
      ->capture_default_str()
      ->check(CLI::IsMember({"shift", "complement-free", "mu1", "gc", "mu1-gc"}));
  count->add_option("-s", cfg.s, "Shift depth for 'shift' (default 2)")->check(CLI::PositiveNumber);
  count->add_option("--match", cfg.match, "mu_1 value for 'mu1'");
  count->add_option("-w", cfg.w, "GC-content for 'gc' and 'mu1-gc'");
  count->add_option("--output", cfg.output, "Output file (default stdout)");
  add_format_option(count, cfg, {"text", "tsv", "csv", "json"});

  auto* construct = app.add_subcommand("construct", "Build and verify the simplex-based DNA code");
  construct->add_option("-m", cfg.m, "Simplex dimension; code length 2^m - 1")->capture_default_str()->check(
      CLI::Range(std::size_t{2}, kMaxSimplexDimension));
  construct->add_option("--generator", cfg.generator, "Simplex generator bit string (default: m-sequence)");
  construct->add_option("--output", cfg.output, "Code file (default stdout); also writes OUTPUT.json and OUTPUT.report.txt");
  construct->add_option("--json", cfg.json_path, "Metadata sidecar path");
  construct->add_option("--report", cfg.report_path, "Verification report path");
  construct->add_flag("--no-fold", cfg.no_fold, "Skip per-codeword Nussinov energies");
  add_threshold_option(construct, cfg, "Structure threshold for the report (default -2)");
  add_energy_options(construct, cfg);

  auto* verify = app.add_subcommand("verify", "Recompute and check the properties of a code file");
  verify->add_option("--input", cfg.input, "Code file")->required();
  verify->add_option("-m", cfg.m_override, "Simplex dimension of the bounds (default: inferred from length)")
      ->check(CLI::Range(std::size_t{2}, kMaxSimplexDimension));
  verify->add_option("--generator", cfg.generator, "Generator recorded in the report");
  verify->add_option("--output", cfg.output, "Report file (default stdout)");
  verify->add_option("--json", cfg.json_path, "Also write the JSON metadata here");
  verify->add_flag("--no-fold", cfg.no_fold, "Skip per-codeword Nussinov energies");
  add_threshold_option(verify, cfg, "Structure threshold (default -2)");
  add_energy_options(verify, cfg);
  add_format_option(verify, cfg, {"text", "json"});
}

namespace detail {

inline bool truthy(std::string v) {
  std::ranges::transform(v, v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

// Pulls --config PATH / --config=PATH out of args.
inline std::optional<std::string> take_config_path(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t k = 0; k < args.size();) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[k + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k), args.begin() + static_cast<std::ptrdiff_t>(k + 2));
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return path;
}

// Config entries become arguments placed right after the subcommand name, so
// later command-line occurrences win (options take the last value). Keys the
// chosen subcommand does not know are ignored.
inline void inject_config(CLI::App& app, std::vector<std::string>& args, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  const auto entries = parse_config(in);
  auto it = std::ranges::find_if(args, [&](const std::string& a) { return app.get_subcommand_no_throw(a) != nullptr; });
  if (it == args.end()) return;
  CLI::App* sub = app.get_subcommand_no_throw(*it);
  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) {
    const std::string name = key.size() == 1 ? "-" + key : "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(name);
    if (opt == nullptr) continue;
    if (opt->get_expected_max() == 0) {
      if (truthy(value)) injected.push_back(name);
    } else {
      injected.push_back(name);
      injected.push_back(value);
    }
  }
  args.insert(it + 1, injected.begin(), injected.end());
}

}  // namespace detail

/// Full command-line entry point; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"oligoforge: DNA codeword design and secondary-structure screening", "oligoforge"};
  build_app(app, cfg);
  try {
    if (auto path = detail::take_config_path(args)) detail::inject_config(app, args, *path);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.command == "fold") return cmd_fold(cfg, out);
    if (cfg.command == "screen") return cmd_screen(cfg, out, err);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.command == "gf") return cmd_gf(cfg, out);
    if (cfg.command == "count") return cmd_count(cfg, out);
    if (cfg.command == "construct") return cmd_construct(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    err << "unknown command\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDataError;
  } catch (const InvalidGenerator& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace oligoforge::cli
