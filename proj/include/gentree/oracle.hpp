#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gentree/perm.hpp"

// Ground truth by exhaustion. Nothing in here reuses the backtracking
// matcher or the site machinery from perm.hpp: containment is decided by
// walking every k-subset of positions, and trees are grown by inserting at
// every site and testing the whole word. Slow on purpose.

namespace gentree {
namespace oracle {

// Subsequence containment by exhaustive enumeration of position subsets.
inline bool contains_naive(const Word& w, const Word& pat) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pat.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    bool iso = true;
    for (int i = 0; i < k && iso; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if ((w[c[i]] < w[c[j]]) != (pat[i] < pat[j])) {
          iso = false;
          break;
        }
      }
    }
    if (iso) return true;
    // next combination
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline bool avoids_naive(const Word& w, const PatternBasis& basis) {
  for (const Word& p : basis.patterns()) {
    if (contains_naive(w, p)) return false;
  }
  return true;
}

struct EnumerationReport {
  std::vector<Word> basis_patterns;
  // counts[i] = number of avoiders of length i+1
  std::vector<long long> counts;
  // max_degree_per_level[i] = most children any avoider of length i+1 has;
  // filled for the lengths the pass expanded (see brute_count/max_children)
  std::vector<long long> max_degree_per_level;
};

inline constexpr int kDefaultHardLimit = 12;

namespace detail {

inline void dfs(Word& w, int target_len, bool expand_last_level,
                const PatternBasis& basis, EnumerationReport& report) {
  const int n = static_cast<int>(w.size());
  report.counts[n - 1] += 1;
  if (n == target_len && !expand_last_level) return;
  const Entry m = static_cast<Entry>(n + 1);
  long long degree = 0;
  for (int site = 1; site <= n + 1; ++site) {
    Word child = insert_at_site(w, site, m);
    if (!avoids_naive(child, basis)) continue;
    ++degree;
    if (n < target_len) {
      dfs(child, target_len, expand_last_level, basis, report);
    }
  }
  if (n - 1 < static_cast<int>(report.max_degree_per_level.size())) {
    report.max_degree_per_level[n - 1] =
        std::max(report.max_degree_per_level[n - 1], degree);
  }
}

inline EnumerationReport enumerate(const PatternBasis& basis, int max_len,
                                   bool expand_last_level, int hard_limit) {
  if (max_len < 1 || max_len > hard_limit) {
    throw std::invalid_argument("enumeration length out of range");
  }
  EnumerationReport report;
  report.basis_patterns = basis.patterns();
  report.counts.assign(max_len, 0);
  report.max_degree_per_level.assign(
      expand_last_level ? max_len : std::max(0, max_len - 1), 0);
  Word root{1};
  if (avoids_naive(root, basis)) {
    dfs(root, max_len, expand_last_level, basis, report);
  }
  return report;
}

}  // namespace detail

// |Av_n| for n = 1..max_len by depth-first insertion from the permutation 1.
// The report's degree column covers lengths 1..max_len-1, the expansions the
// counts needed anyway.
inline EnumerationReport brute_count(const PatternBasis& basis, int max_len,
                                     int hard_limit = kDefaultHardLimit) {
  return detail::enumerate(basis, max_len, /*expand_last_level=*/false,
                           hard_limit);
}

// Per-length maximum child counts, for lengths 1..max_len. Expands one level
// past max_len to count the children of the longest avoiders.
inline std::vector<long long> max_children(const PatternBasis& basis,
                                           int max_len,
                                           int hard_limit = kDefaultHardLimit) {
  return detail::enumerate(basis, max_len, /*expand_last_level=*/true,
                           hard_limit)
      .max_degree_per_level;
}

// Level counts of the tree rooted at `root` whose nodes are basis-avoiding
// shuffles of root with n+1, n+2, ...; exhaustive insertion, naive checks.
// Lives here so tree-level claims can be checked against an independent
// path.
inline std::vector<long long> level_counts_naive(const Word& root, int n,
                                                 const PatternBasis& basis,
                                                 int r_max) {
  std::vector<long long> levels;
  levels.push_back(1);
  std::vector<Word> frontier{root};
  for (int depth = 1; depth <= r_max; ++depth) {
    const Entry m = static_cast<Entry>(n + depth);
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int site = 1; site <= static_cast<int>(w.size()) + 1; ++site) {
        Word child = insert_at_site(w, site, m);
        if (avoids_naive(child, basis)) next.push_back(std::move(child));
      }
    }
    levels.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  return levels;
}

}  // namespace oracle
}  // namespace gentree
