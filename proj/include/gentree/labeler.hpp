#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gentree/perm.hpp"
#include "gentree/poly.hpp"
#include "gentree/wtree.hpp"

namespace gentree {

using RuleMap = std::map<Word, std::vector<Word>, LenLexLess>;

// A finitely labeled generating tree: the root's label plus, per label, the
// ordered list of labels its children take. Labels are irreducible
// basis-avoiding permutations. An absent root means the avoidance class is
// empty.
struct GeneratingTreeSpec {
  std::optional<Word> root;
  RuleMap rules;

  bool empty() const { return !root.has_value(); }
};

// Every label on a right side has a rule of its own (possibly a sink).
inline bool is_closed(const GeneratingTreeSpec& spec) {
  if (!spec.root) return spec.rules.empty();
  if (!spec.rules.count(*spec.root)) return false;
  for (const auto& [parent, kids] : spec.rules) {
    for (const Word& kid : kids) {
      if (!spec.rules.count(kid)) return false;
    }
  }
  return true;
}

// Rules restricted to the labels reachable from the root.
inline GeneratingTreeSpec prune_unreachable(const GeneratingTreeSpec& spec) {
  GeneratingTreeSpec out;
  if (!spec.root) return out;
  out.root = spec.root;
  std::set<Word, LenLexLess> seen{*spec.root};
  std::vector<Word> queue{*spec.root};
  while (!queue.empty()) {
    Word label = queue.back();
    queue.pop_back();
    auto it = spec.rules.find(label);
    if (it == spec.rules.end()) continue;
    out.rules[label] = it->second;
    for (const Word& kid : it->second) {
      if (seen.insert(kid).second) queue.push_back(kid);
    }
  }
  return out;
}

struct DeriveCaps {
  int max_length = 50;
  int max_labels = 10000;
};

enum class DeriveStatus { ok, unbounded, cap_exceeded };

struct DeriveResult {
  DeriveStatus status = DeriveStatus::ok;
  GeneratingTreeSpec spec;  // meaningful only when status == ok

  bool ok() const { return status == DeriveStatus::ok; }
};

namespace detail {

// One derivation session. Keeps the frontier of permutations still to be
// processed, the rule set recorded so far, and the resolved label of every
// permutation that turned out reducible.
class Deriver {
 public:
  Deriver(const PatternBasis& basis, DeriveCaps caps)
      : basis_(basis), caps_(caps), cache_(basis) {}

  DeriveResult run() {
    GeneratingTreeSpec spec;
    if (basis_.forbids_everything()) {
      return {DeriveStatus::ok, std::move(spec)};
    }
    if (!basis_.degree_bound()) {
      return {DeriveStatus::unbounded, std::move(spec)};
    }
    const Word root{1};
    pending_.insert(root);
    while (!pending_.empty()) {
      const Word pi = *pending_.begin();
      pending_.erase(pending_.begin());
      if (static_cast<int>(pi.size()) > caps_.max_length) {
        return {DeriveStatus::cap_exceeded, {}};
      }
      if (rules_.count(pi) || label_of_.count(pi)) continue;
      const auto x = find_gt_reduction(pi, basis_, &cache_);
      if (x) {
        reduce(pi, *x);
      } else {
        expand(pi);
        if (static_cast<int>(rules_.size()) > caps_.max_labels) {
          return {DeriveStatus::cap_exceeded, {}};
        }
      }
    }
    spec.root = root;
    spec.rules = std::move(rules_);
    return {DeriveStatus::ok, prune_unreachable(spec)};
  }

 private:
  // Records the rule for an irreducible permutation. Marking the rule
  // before resolving the children matters: a child's reduction chain can
  // land back on pi itself.
  void expand(const Word& pi) {
    rules_[pi] = {};
    std::vector<Word> rhs;
    for (const Word& kid : children(pi, basis_)) {
      rhs.push_back(emit(kid));
    }
    rules_[pi] = std::move(rhs);
  }

  // Label to record for a freshly produced child: already-reduced ones get
  // their resolved label, unseen ones enter the frontier under their own
  // name and are rewritten later if they reduce.
  Word emit(const Word& kid) {
    auto it = label_of_.find(kid);
    if (it != label_of_.end()) return it->second;
    if (!rules_.count(kid)) pending_.insert(kid);
    return kid;
  }

  void reduce(const Word& pi, Entry x) {
    const Word target = resolve_label(standardize(delete_entry(pi, x)));
    label_of_[pi] = target;
    rewrite(pi, target);
  }

  // The label of an arbitrary basis-avoiding permutation: follow reductions
  // until an irreducible permutation remains; enqueue that one if it has no
  // rule yet, so the rule system stays closed.
  Word resolve_label(const Word& tau) {
    auto it = label_of_.find(tau);
    if (it != label_of_.end()) return it->second;
    if (rules_.count(tau)) return tau;
    const auto x = find_gt_reduction(tau, basis_, &cache_);
    if (!x) {
      pending_.insert(tau);
      return tau;
    }
    const Word target = resolve_label(standardize(delete_entry(tau, *x)));
    label_of_[tau] = target;
    rewrite(tau, target);
    pending_.erase(tau);
    return target;
  }

  void rewrite(const Word& from, const Word& to) {
    for (auto& [parent, kids] : rules_) {
      for (Word& kid : kids) {
        if (kid == from) kid = to;
      }
    }
  }

  const PatternBasis& basis_;
  DeriveCaps caps_;
  LevelCountCache cache_;
  std::set<Word, LenLexLess> pending_;
  RuleMap rules_;
  std::map<Word, Word, LenLexLess> label_of_;
};

}  // namespace detail

// Derives a finitely labeled generating tree for the avoidance class of the
// basis. Returns an empty spec when nothing avoids the basis, `unbounded`
// when no finite labeling exists (missing increasing- or decreasing-child
// witness), and `cap_exceeded` only if the caps fire.
inline DeriveResult derive(const PatternBasis& basis, DeriveCaps caps = {}) {
  return detail::Deriver(basis, caps).run();
}

// The label of a basis-avoiding permutation outside any derivation session:
// follow reductions to the irreducible end of the chain.
inline Word reduce_to_label(const Word& pi, const PatternBasis& basis,
                            LevelCountCache* cache = nullptr) {
  LevelCountCache local{basis};
  LevelCountCache* use = cache ? cache : &local;
  Word cur = pi;
  while (true) {
    const auto x = find_gt_reduction(cur, basis, use);
    if (!x) return cur;
    cur = standardize(delete_entry(cur, *x));
  }
}

// Node counts of the labeled tree at depths 0..depth_max, by iterating the
// rules from the root. Depth d corresponds to permutation length d+1.
inline std::vector<BigInt> spec_level_counts(const GeneratingTreeSpec& spec,
                                             int depth_max) {
  std::vector<BigInt> levels(depth_max + 1, 0);
  if (!spec.root) return levels;
  std::map<Word, BigInt, LenLexLess> current;
  current[*spec.root] = 1;
  for (int d = 0; d <= depth_max; ++d) {
    BigInt total = 0;
    for (const auto& [label, cnt] : current) total += cnt;
    levels[d] = total;
    if (d == depth_max) break;
    std::map<Word, BigInt, LenLexLess> next;
    for (const auto& [label, cnt] : current) {
      auto it = spec.rules.find(label);
      if (it == spec.rules.end()) continue;
      for (const Word& kid : it->second) next[kid] += cnt;
    }
    current = std::move(next);
  }
  return levels;
}

// Stable text form: root line plus one rule per line, labels in canonical
// permutation syntax, keys already in length-then-lex order.
inline std::string spec_to_text(const GeneratingTreeSpec& spec) {
  if (!spec.root) return "empty tree\n";
  std::string out = "root (" + word_to_string(*spec.root) + ")\n";
  for (const auto& [parent, kids] : spec.rules) {
    out += "(" + word_to_string(parent) + ") ->";
    if (kids.empty()) {
      out += " ()";
    } else {
      out += " ";
      for (const Word& kid : kids) {
        out += "(" + word_to_string(kid) + ")";
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace gentree
