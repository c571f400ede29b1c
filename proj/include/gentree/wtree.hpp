#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gentree/perm.hpp"

namespace gentree {

// The tree of basis-avoiding words grown from `root` by inserting the fresh
// values context_max+1, context_max+2, ... level by level, at every site
// that keeps the word avoiding. Rooting at a permutation pi with
// context_max = |pi| gives the subtree of the pattern-avoidance tree below
// pi. Keeping the original entry values (no re-standardization) is the
// point: deletions and re-insertions stay aligned.
class WTree {
 public:
  WTree(Word root, int context_max, PatternBasis basis)
      : root_(std::move(root)),
        context_max_(context_max),
        basis_(std::move(basis)) {
    for (Entry e : root_) {
      if (e > context_max_) {
        throw std::invalid_argument("root entry exceeds context maximum");
      }
    }
    if (!all_distinct(root_)) {
      throw std::invalid_argument("root entries must be distinct");
    }
    if (!avoids_all(root_, basis_)) {
      throw std::invalid_argument("root must avoid the basis");
    }
  }

  const Word& root() const { return root_; }
  int context_max() const { return context_max_; }
  const PatternBasis& basis() const { return basis_; }

 private:
  Word root_;
  int context_max_;
  PatternBasis basis_;
};

// Number of nodes at each height 0..r_max, by breadth-first expansion.
inline std::vector<long long> level_counts(const WTree& t, int r_max) {
  std::vector<long long> levels{1};
  std::vector<Word> frontier{t.root()};
  for (int depth = 1; depth <= r_max; ++depth) {
    const Entry m = static_cast<Entry>(t.context_max() + depth);
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Word& child : children_words(w, m, t.basis())) {
        next.push_back(std::move(child));
      }
    }
    levels.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  return levels;
}

// An entry is removable when it is adjacent to at most one active site:
// left-removable when the site before it is inactive, right-removable when
// the site after it is.
struct RemovabilityRecord {
  Entry entry = 0;
  bool left_removable = false;
  bool right_removable = false;

  bool removable() const { return left_removable || right_removable; }
};

namespace detail {

inline std::vector<RemovabilityRecord> removability_from_sites(
    const Word& w, const std::vector<int>& sites) {
  std::vector<bool> active(w.size() + 2, false);
  for (int s : sites) active[s] = true;
  std::vector<RemovabilityRecord> records;
  records.reserve(w.size());
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    records.push_back({w[i - 1], !active[i], !active[i + 1]});
  }
  return records;
}

}  // namespace detail

// One record per entry of w, in word order; sites are taken relative to
// inserting the new maximum m.
inline std::vector<RemovabilityRecord> removability(const Word& w, Entry m,
                                                    const PatternBasis& basis) {
  if (!avoids_all(w, basis)) {
    throw std::invalid_argument("word must avoid the basis");
  }
  return detail::removability_from_sites(w, active_sites(w, m, basis));
}

// w with the entry x removed, everything else in place.
inline Word delete_entry(const Word& w, Entry x) {
  Word out;
  out.reserve(w.size() - 1);
  bool found = false;
  for (Entry e : w) {
    if (e == x) {
      found = true;
    } else {
      out.push_back(e);
    }
  }
  if (!found) throw std::invalid_argument("entry not present in word");
  return out;
}

enum class Side { left, right };

// Re-inserts x into w next to the neighbor it had in u: on the left side,
// immediately right of u's predecessor of x (or prepended when x led u); on
// the right side, immediately left of u's successor of x (or appended when
// x ended u). Requires w to carry every entry of u except x, and not x.
inline Word insert_adjacent(const Word& u, Entry x, Side side, const Word& w) {
  const auto it = std::find(u.begin(), u.end(), x);
  if (it == u.end()) throw std::invalid_argument("x is not an entry of u");
  const int i = static_cast<int>(it - u.begin());  // 0-based position in u
  if (std::find(w.begin(), w.end(), x) != w.end()) {
    throw std::invalid_argument("w already carries x");
  }
  for (Entry e : u) {
    if (e != x && std::find(w.begin(), w.end(), e) == w.end()) {
      throw std::invalid_argument("w is missing an entry of u");
    }
  }
  Word out = w;
  if (side == Side::left) {
    if (i == 0) {
      out.insert(out.begin(), x);
    } else {
      const Entry anchor = u[i - 1];
      const auto pos = std::find(out.begin(), out.end(), anchor);
      out.insert(pos + 1, x);
    }
  } else {
    if (i == static_cast<int>(u.size()) - 1) {
      out.push_back(x);
    } else {
      const Entry anchor = u[i + 1];
      const auto pos = std::find(out.begin(), out.end(), anchor);
      out.insert(pos, x);
    }
  }
  return out;
}

// Memoized level counting for one basis. Counts depend only on the root
// word's relative order, not on the context maximum, so the word alone is
// the key; every query in a derivation session goes through one of these.
class LevelCountCache {
 public:
  explicit LevelCountCache(PatternBasis basis) : basis_(std::move(basis)) {}

  const PatternBasis& basis() const { return basis_; }

  std::vector<long long> counts(const Word& root, int context_max, int r_max) {
    auto& slot = memo_[root];
    if (static_cast<int>(slot.size()) <= r_max) {
      slot = level_counts(WTree(root, context_max, basis_), r_max);
    }
    return std::vector<long long>(slot.begin(), slot.begin() + r_max + 1);
  }

 private:
  PatternBasis basis_;
  std::map<Word, std::vector<long long>> memo_;
};

// Decides whether the removable entry x can be deleted from the root
// without changing the tree's shape: by the reinsertion argument this holds
// exactly when the level counts of the tree and of the tree rooted at
// root-x agree at every height 1..max_len-1.
inline bool is_gt_reducible_entry(const WTree& t, Entry x,
                                  LevelCountCache* cache = nullptr) {
  if (t.root().size() < 2) {
    throw std::invalid_argument("root must have length at least two");
  }
  const Entry m = static_cast<Entry>(t.context_max() + 1);
  const auto records =
      detail::removability_from_sites(t.root(),
                                      active_sites(t.root(), m, t.basis()));
  bool removable = false;
  for (const auto& rec : records) {
    if (rec.entry == x) removable = rec.removable();
  }
  if (!removable) {
    throw std::invalid_argument("entry is not removable");
  }
  const int r_hi = t.basis().max_len() - 1;
  const Word reduced = delete_entry(t.root(), x);
  std::vector<long long> full, dropped;
  if (cache) {
    full = cache->counts(t.root(), t.context_max(), r_hi);
    dropped = cache->counts(reduced, t.context_max(), r_hi);
  } else {
    full = level_counts(t, r_hi);
    dropped = level_counts(WTree(reduced, t.context_max(), t.basis()), r_hi);
  }
  for (int r = 1; r <= r_hi; ++r) {
    if (full[r] != dropped[r]) return false;
  }
  return true;
}

// The reducible entry of smallest value in the basis-avoiding permutation
// pi, if any. The one-point permutation never reduces.
inline std::optional<Entry> find_gt_reduction(const Word& pi,
                                              const PatternBasis& basis,
                                              LevelCountCache* cache = nullptr) {
  if (pi.size() <= 1) return std::nullopt;
  const int n = static_cast<int>(pi.size());
  const auto records = detail::removability_from_sites(
      pi, active_sites(pi, static_cast<Entry>(n + 1), basis));
  std::vector<Entry> candidates;
  for (const auto& rec : records) {
    if (rec.removable()) candidates.push_back(rec.entry);
  }
  std::sort(candidates.begin(), candidates.end());
  WTree t(pi, n, basis);
  for (Entry x : candidates) {
    if (is_gt_reducible_entry(t, x, cache)) return x;
  }
  return std::nullopt;
}

}  // namespace gentree
