#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gentree/crosscheck.hpp"

namespace gentree {
namespace cli {

// Exit contract shared by every subcommand: 0 success, 1 unbounded /
// diverged / verification failure, 2 bad input.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline DeriveCaps caps_from_env() {
  DeriveCaps caps;
  if (const char* s = std::getenv("GENTREE_MAX_LABELS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v > 0) {
      caps.max_labels = static_cast<int>(v);
    } else {
      throw std::invalid_argument(
          "GENTREE_MAX_LABELS must be a positive integer");
    }
  }
  return caps;
}

inline nlohmann::ordered_json spec_to_json(const GeneratingTreeSpec& spec) {
  nlohmann::ordered_json j;
  if (spec.root) {
    j["root"] = word_to_string(*spec.root);
  } else {
    j["root"] = nullptr;
  }
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (const auto& [parent, kids] : spec.rules) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Word& kid : kids) arr.push_back(word_to_string(kid));
    rules[word_to_string(parent)] = std::move(arr);
  }
  j["rules"] = std::move(rules);
  return j;
}

inline GeneratingTreeSpec spec_from_json(const nlohmann::ordered_json& j) {
  GeneratingTreeSpec spec;
  if (!j.contains("root") || !j.contains("rules")) {
    throw std::invalid_argument("spec json needs 'root' and 'rules'");
  }
  if (!j["root"].is_null()) {
    spec.root = parse_perm(j["root"].get<std::string>());
  }
  for (const auto& [key, kids] : j["rules"].items()) {
    std::vector<Word> rhs;
    for (const auto& kid : kids) {
      rhs.push_back(parse_perm(kid.get<std::string>()));
    }
    spec.rules[parse_perm(key)] = std::move(rhs);
  }
  if (!is_closed(spec)) {
    throw std::invalid_argument("spec json is not closed");
  }
  return spec;
}

// Label automaton in DOT: one node per label, one edge per child
// occurrence, root double-circled.
inline std::string spec_to_dot(const GeneratingTreeSpec& spec) {
  std::string out = "digraph gentree {\n  rankdir=LR;\n";
  if (spec.root) {
    for (const auto& [label, kids] : spec.rules) {
      out += "  \"" + word_to_string(label) + "\"";
      if (label == *spec.root) out += " [peripheries=2]";
      out += ";\n";
    }
    for (const auto& [label, kids] : spec.rules) {
      for (const Word& kid : kids) {
        out += "  \"" + word_to_string(label) + "\" -> \"" +
               word_to_string(kid) + "\";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

inline CommandResult run_check(const std::string& basis_text) {
  CommandResult r;
  std::optional<PatternBasis> parsed;
  try {
    parsed = parse_basis(basis_text);
  } catch (const std::exception& e) {
    r.err = std::string("input error: ") + e.what() + "\n";
    r.exit_code = 2;
    return r;
  }
  const PatternBasis& basis = *parsed;
  std::ostringstream os;
  os << "basis:";
  for (const Word& p : basis.patterns()) os << " " << word_to_string(p);
  os << "\n";
  const auto& inc = basis.inc_child_witness();
  const auto& dec = basis.dec_child_witness();
  os << "child of increasing: " << (inc ? word_to_string(*inc) : "(none)")
     << "\n";
  os << "child of decreasing: " << (dec ? word_to_string(*dec) : "(none)")
     << "\n";
  if (const auto bound = basis.degree_bound()) {
    os << "bounded: yes\ndegree bound: " << *bound << "\n";
    r.exit_code = 0;
  } else {
    os << "bounded: no\n"
          "the avoidance tree has unbounded degrees; "
          "no finitely labeled generating tree exists\n";
    r.exit_code = 1;
  }
  r.out = os.str();
  return r;
}

enum class TreeFormat { text, json, dot };

namespace detail {

// Shared front half of the derivation commands: parse, honor the env cap,
// derive. Fills the result and returns false when the pipeline stops.
inline bool derive_for_command(const std::string& basis_text,
                               CommandResult& r,
                               std::optional<PatternBasis>* basis_out,
                               GeneratingTreeSpec* spec_out) {
  try {
    const PatternBasis basis = parse_basis(basis_text);
    const DeriveCaps caps = caps_from_env();
    const DeriveResult res = derive(basis, caps);
    if (res.status == DeriveStatus::unbounded) {
      r.err =
          "error: the avoidance tree for this basis has unbounded degrees; "
          "no finitely labeled generating tree exists\n";
      r.exit_code = 1;
      return false;
    }
    if (res.status == DeriveStatus::cap_exceeded) {
      r.err = "error: derivation exceeded its caps\n";
      r.exit_code = 1;
      return false;
    }
    if (basis_out) *basis_out = basis;
    if (spec_out) *spec_out = res.spec;
    return true;
  } catch (const std::exception& e) {
    r.err = std::string("input error: ") + e.what() + "\n";
    r.exit_code = 2;
    return false;
  }
}

}  // namespace detail

inline CommandResult run_tree(const std::string& basis_text,
                              TreeFormat format) {
  CommandResult r;
  GeneratingTreeSpec spec;
  if (!detail::derive_for_command(basis_text, r, nullptr, &spec)) return r;
  switch (format) {
    case TreeFormat::text:
      r.out = spec_to_text(spec);
      break;
    case TreeFormat::json:
      r.out = spec_to_json(spec).dump(2) + "\n";
      break;
    case TreeFormat::dot:
      r.out = spec_to_dot(spec);
      break;
  }
  return r;
}

inline CommandResult run_gf(const std::string& basis_text, bool latex) {
  CommandResult r;
  GeneratingTreeSpec spec;
  if (!detail::derive_for_command(basis_text, r, nullptr, &spec)) return r;
  const RationalFn gf = rational_gf(spec);
  r.out = (latex ? gf_to_latex(gf) : gf_to_string(gf)) + "\n";
  return r;
}

inline CommandResult run_count(const std::string& basis_text, int n_max,
                               bool use_oracle) {
  CommandResult r;
  if (n_max < 1) {
    r.err = "input error: count length must be positive\n";
    r.exit_code = 2;
    return r;
  }
  std::vector<std::string> values;
  if (use_oracle) {
    try {
      const PatternBasis basis = parse_basis(basis_text);
      const auto report = oracle::brute_count(basis, n_max);
      for (long long c : report.counts) values.push_back(std::to_string(c));
    } catch (const std::exception& e) {
      r.err = std::string("input error: ") + e.what() + "\n";
      r.exit_code = 2;
      return r;
    }
  } else {
    GeneratingTreeSpec spec;
    if (!detail::derive_for_command(basis_text, r, nullptr, &spec)) return r;
    for (const BigInt& c : series(rational_gf(spec), n_max)) {
      values.push_back(c.str());
    }
  }
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += " ";
    line += values[i];
  }
  r.out = line + "\n";
  return r;
}

inline CommandResult run_verify(const std::string& basis_text, int n_max) {
  CommandResult r;
  std::optional<PatternBasis> basis;
  GeneratingTreeSpec spec;
  if (!detail::derive_for_command(basis_text, r, &basis, &spec)) return r;
  try {
    const auto check = oracle::crosscheck(*basis, n_max, spec);
    if (check.pass) {
      r.out = "PASS: oracle, series, and rule iteration agree up to length " +
              std::to_string(n_max) + "\n";
    } else {
      r.out = "FAIL: " + check.detail + "\n";
      r.exit_code = 1;
    }
  } catch (const std::exception& e) {
    r.err = std::string("input error: ") + e.what() + "\n";
    r.exit_code = 2;
  }
  return r;
}

inline CommandResult run_tables(const std::string& config_path) {
  CommandResult r;
  nlohmann::ordered_json config;
  try {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open " + config_path);
    in >> config;
  } catch (const std::exception& e) {
    r.err = std::string("input error: ") + e.what() + "\n";
    r.exit_code = 2;
    return r;
  }
  std::ostringstream os;
  int failures = 0;
  int rows = 0;
  try {
    const int depth = config.value("series_depth", 8);
    if (!config.contains("entries") || !config["entries"].is_array()) {
      throw std::invalid_argument("config needs an 'entries' array");
    }
    for (const auto& entry : config["entries"]) {
      const std::string basis_text = entry.at("basis").get<std::string>();
      const std::string expected_text = entry.at("gf").get<std::string>();
      const PatternBasis basis = parse_basis(basis_text);
      const RationalFn expected = parse_gf(expected_text);
      ++rows;
      const DeriveResult res = derive(basis, caps_from_env());
      if (!res.ok()) {
        os << "FAIL " << basis_text << " -> derivation "
           << (res.status == DeriveStatus::unbounded ? "unbounded"
                                                     : "exceeded caps")
           << "\n";
        ++failures;
        continue;
      }
      const RationalFn gf = rational_gf(res.spec);
      if (gf_equal(gf, expected)) {
        os << "PASS " << basis_text << " -> " << gf_to_string(gf)
           << "  counts:";
        for (const BigInt& c : series(gf, depth)) os << " " << c.str();
        os << "\n";
      } else {
        os << "FAIL " << basis_text << " -> derived " << gf_to_string(gf)
           << " expected " << gf_to_string(expected) << "\n";
        ++failures;
      }
    }
  } catch (const std::exception& e) {
    r.err = std::string("input error: ") + e.what() + "\n";
    r.exit_code = 2;
    return r;
  }
  os << rows - failures << "/" << rows << " rows pass\n";
  r.out = os.str();
  r.exit_code = failures == 0 ? 0 : 1;
  return r;
}

}  // namespace cli
}  // namespace gentree
