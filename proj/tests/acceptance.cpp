// Acceptance suite: runs the headline checks end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if anything fails.
//
// Usage: acceptance [config-dir]   (default: ./configs)

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gentree/cli.hpp"

using namespace gentree;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(int index, bool ok, const std::string& what, double elapsed_ms,
            double budget_ms) {
  const bool in_budget = elapsed_ms < budget_ms;
  std::printf("%s criterion %d: %s (%.0f ms, budget %.0f ms)\n",
              ok && in_budget ? "PASS" : "FAIL", index, what.c_str(),
              elapsed_ms, budget_ms);
  if (!ok || !in_budget) ++failures;
}

std::vector<std::string> config_bases(const std::string& path) {
  std::ifstream in(path);
  nlohmann::ordered_json j;
  in >> j;
  std::vector<std::string> out;
  for (const auto& entry : j["entries"]) {
    out.push_back(entry["basis"].get<std::string>());
  }
  return out;
}

std::multiset<Word> multiset_of(const std::vector<Word>& kids) {
  return std::multiset<Word>(kids.begin(), kids.end());
}

bool worked_example() {
  const auto res = derive(parse_basis("132,3241"));
  if (!res.ok() || res.spec.rules.size() != 2 || !res.spec.root) return false;
  const Word root_label = *res.spec.root;
  Word other;
  for (const auto& [label, kids] : res.spec.rules) {
    if (label != root_label) other = label;
  }
  // (root) ~> (root)(other) and (other) ~> (other)(other)(root), sibling
  // order free
  if (multiset_of(res.spec.rules.at(root_label)) !=
      std::multiset<Word>{root_label, other}) {
    return false;
  }
  if (multiset_of(res.spec.rules.at(other)) !=
      std::multiset<Word>{other, other, root_label}) {
    return false;
  }
  const RationalFn gf = rational_gf(res.spec);
  if (!gf_equal(gf, parse_gf("x(1-x)/(x^2-3x+1)"))) return false;
  const std::vector<BigInt> expect{1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181};
  return series(gf, 10) == expect;
}

bool chart_levels() {
  const auto basis = parse_basis("132,3241");
  const std::vector<long long> expect{1, 2, 5, 13};
  return level_counts(WTree({2}, 2, basis), 3) == expect &&
         level_counts(WTree({1, 2}, 2, basis), 3) == expect;
}

bool tables_pass(const std::string& dir, std::string& summary) {
  const struct {
    const char* file;
    const char* want;
  } jobs[] = {{"simion_schmidt.json", "10/10 rows pass"},
              {"west.json", "12/12 rows pass"},
              {"kremer_shiu.json", "10/10 rows pass"}};
  bool ok = true;
  std::ostringstream note;
  for (const auto& job : jobs) {
    const auto r = cli::run_tables(dir + "/" + job.file);
    const bool good =
        r.exit_code == 0 && r.out.find(job.want) != std::string::npos;
    if (!good) ok = false;
    note << job.file << (good ? " ok" : " FAILED") << "; ";
  }
  summary = note.str();
  return ok;
}

bool oracle_concordance(const std::vector<std::string>& bases) {
  for (const std::string& text : bases) {
    const auto basis = parse_basis(text);
    const auto res = derive(basis);
    if (!res.ok()) return false;
    if (!oracle::crosscheck(basis, 10, res.spec).pass) return false;
  }
  return true;
}

bool boundedness(const std::vector<std::string>& table_bases) {
  for (const char* text : {"123", "321", "132,4123"}) {
    if (cli::run_check(text).exit_code != 1) return false;
  }
  for (const std::string& text : table_bases) {
    if (cli::run_check(text).exit_code != 0) return false;
  }
  const auto degrees = oracle::max_children(parse_basis("123"), 6);
  if (degrees != std::vector<long long>{2, 3, 4, 5, 6, 7}) return false;
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] <= degrees[i - 1]) return false;
  }
  return true;
}

bool erdos_szekeres() {
  const auto counts = oracle::brute_count(parse_basis("123,4321"), 10).counts;
  if (counts != std::vector<long long>{1, 2, 5, 13, 25, 25, 0, 0, 0, 0}) {
    return false;
  }
  for (int k = 2; k <= 4; ++k) {
    for (int l = 2; l <= 4; ++l) {
      Word inc(k), dec(l);
      for (int i = 0; i < k; ++i) inc[i] = i + 1;
      for (int i = 0; i < l; ++i) dec[i] = l - i;
      const auto basis = PatternBasis::minimalize({inc, dec});
      const int cutoff = (k - 1) * (l - 1) + 1;
      const auto c = oracle::brute_count(basis, std::min(cutoff + 1, 12)).counts;
      for (int n = cutoff; n <= static_cast<int>(c.size()); ++n) {
        if (c[n - 1] != 0) return false;
      }
      if (c[cutoff - 2] == 0) return false;
    }
  }
  return true;
}

// Basis-avoiding permutations of length 1..max_len, main path.
std::vector<Word> avoiders(const PatternBasis& basis, int max_len) {
  std::vector<Word> out;
  std::vector<Word> frontier;
  if (avoids_all({1}, basis)) frontier.push_back({1});
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& w : frontier) out.push_back(w);
    if (len == max_len) break;
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& kid : children(w, basis)) next.push_back(kid);
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Word> wtree_nodes(const Word& root, int n,
                              const PatternBasis& basis, int depth) {
  std::vector<Word> out{root};
  std::vector<Word> frontier{root};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Word& kid : children_words(w, n + d, basis)) {
        next.push_back(std::move(kid));
      }
    }
    for (const Word& w : next) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

bool property_suites() {
  // deletion/reinsertion identity on every avoider up to length 6, depth 4
  for (const char* text : {"132,3241", "123,231", "12"}) {
    const auto basis = parse_basis(text);
    for (const Word& u : avoiders(basis, 6)) {
      if (u.size() < 2) continue;
      const int n = static_cast<int>(u.size());
      const auto nodes = wtree_nodes(u, n, basis, 4);
      for (const auto& rec : removability(u, n + 1, basis)) {
        if (!rec.removable()) continue;
        const Side side = rec.left_removable ? Side::left : Side::right;
        for (const Word& w : nodes) {
          if (insert_adjacent(u, rec.entry, side,
                              delete_entry(w, rec.entry)) != w) {
            return false;
          }
        }
      }
    }
  }
  // commuting reinsertions for nonadjacent entries, unrestricted shuffles
  const auto free_basis = PatternBasis::minimalize({{1, 2, 3, 4, 5, 6, 7}});
  std::vector<Word> roots;
  Word p{1, 2, 3, 4};
  do {
    roots.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (const Word& u : roots) {
    const int n = static_cast<int>(u.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (std::abs(i - j) <= 1) continue;
        const Entry x = u[i], y = u[j];
        const Word ux = delete_entry(u, x);
        const Word uy = delete_entry(u, y);
        const Word base = delete_entry(ux, y);
        for (Side dx : {Side::left, Side::right}) {
          for (Side dy : {Side::left, Side::right}) {
            for (const Word& w : wtree_nodes(base, n, free_basis, 3)) {
              if (insert_adjacent(u, x, dx, insert_adjacent(ux, y, dy, w)) !=
                  insert_adjacent(u, y, dy, insert_adjacent(uy, x, dx, w))) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  // a positive reducibility verdict extends to depth 6
  for (const char* text : {"132,3241", "123,231"}) {
    const auto basis = parse_basis(text);
    for (const Word& u : avoiders(basis, 5)) {
      if (u.size() < 2) continue;
      const int n = static_cast<int>(u.size());
      const WTree t(u, n, basis);
      for (const auto& rec : removability(u, n + 1, basis)) {
        if (!rec.removable() || !is_gt_reducible_entry(t, rec.entry)) continue;
        if (level_counts(t, 6) !=
            level_counts(WTree(delete_entry(u, rec.entry), n, basis), 6)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool termination_corpus(int& bases_run) {
  std::vector<Word> inc_children, dec_children;
  for (int len = 1; len <= 4; ++len) {
    Word p(len);
    for (int i = 0; i < len; ++i) p[i] = i + 1;
    do {
      if (PatternBasis::is_child_of_increasing(p)) inc_children.push_back(p);
      if (PatternBasis::is_child_of_decreasing(p)) dec_children.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  bases_run = 0;
  for (const Word& a : inc_children) {
    for (const Word& b : dec_children) {
      const auto basis = PatternBasis::minimalize({a, b});
      ++bases_run;
      if (derive(basis).status != DeriveStatus::ok) return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string config_dir = argc > 1 ? argv[1] : "configs";

  auto t = Clock::now();
  bool ok = worked_example();
  report(1, ok, "worked example: two labels, rules, gf, series to n=10",
         ms_since(t), 1000);

  t = Clock::now();
  ok = chart_levels();
  report(2, ok, "reducibility chart levels 1,2,5,13 both trees", ms_since(t),
         1000);

  t = Clock::now();
  std::string summary;
  ok = tables_pass(config_dir, summary);
  report(3, ok, "table reproduction: " + summary, ms_since(t), 60000);

  std::vector<std::string> bases{"132,3241"};
  for (const char* file :
       {"simion_schmidt.json", "west.json", "kremer_shiu.json"}) {
    for (auto& b : config_bases(config_dir + "/" + std::string(file))) {
      bases.push_back(b);
    }
  }

  t = Clock::now();
  ok = oracle_concordance(bases);
  report(4, ok,
         "oracle concordance to n=10 on all " + std::to_string(bases.size()) +
             " bases",
         ms_since(t), 120000);

  t = Clock::now();
  ok = boundedness(bases);
  report(5, ok, "boundedness classification and {123} degrees", ms_since(t),
         30000);

  t = Clock::now();
  ok = erdos_szekeres();
  report(6, ok, "finite classes vanish where they must", ms_since(t), 30000);

  t = Clock::now();
  ok = property_suites();
  report(7, ok,
         "deletion/reinsertion identity, commutation, depth-6 agreement",
         ms_since(t), 60000);

  t = Clock::now();
  int corpus = 0;
  ok = termination_corpus(corpus);
  report(8, ok,
         "termination on all " + std::to_string(corpus) +
             " increasing-child x decreasing-child bases",
         ms_since(t), 120000);

  if (failures == 0) {
    std::printf("all criteria pass\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
