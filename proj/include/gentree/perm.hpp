#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentree {

// A word is a sequence of pairwise distinct positive integers, 1-indexed in
// all position talk. A permutation is the special case whose entries are
// exactly 1..n.
using Entry = int;
using Word = std::vector<Entry>;

// Length-then-lexicographic order; the deterministic order used for labels,
// queues and serialized output.
struct LenLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline bool all_distinct(const Word& w) {
  Word s = w;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline bool is_permutation_word(const Word& w) {
  Word s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != static_cast<Entry>(i + 1)) return false;
  }
  return true;
}

// Relabels w order-isomorphically onto 1..n: the smallest entry becomes 1,
// the next smallest 2, and so on.
inline Word standardize(const Word& w) {
  std::vector<std::size_t> idx(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    out[idx[r]] = static_cast<Entry>(r + 1);
  }
  return out;
}

namespace detail {

// Backtracking subsequence matcher. Looks for positions p_0 < ... < p_{k-1}
// in w whose entries are order-isomorphic to pat. If pin_pat >= 0, pattern
// position pin_pat must be matched to word position pin_word.
inline bool match_rec(const Word& w, const Word& pat, int d, int start,
                      std::vector<int>& pos, int pin_pat, int pin_word) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pat.size());
  if (d == k) return true;
  const int last = n - (k - d);
  if (d == pin_pat && (pin_word < start || pin_word > last)) return false;
  const int lo = (d == pin_pat) ? pin_word : start;
  const int hi = (d == pin_pat) ? pin_word : last;
  for (int i = lo; i <= hi; ++i) {
    if (pin_pat >= 0 && d < pin_pat && i >= pin_word) break;
    bool ok = true;
    for (int j = 0; j < d; ++j) {
      if ((w[pos[j]] < w[i]) != (pat[j] < pat[d])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    pos[d] = i;
    if (match_rec(w, pat, d + 1, i + 1, pos, pin_pat, pin_word)) return true;
  }
  return false;
}

inline bool match(const Word& w, const Word& pat, int pin_pat = -1,
                  int pin_word = -1) {
  if (pat.empty()) return true;
  if (pat.size() > w.size()) return false;
  std::vector<int> pos(pat.size());
  return match_rec(w, pat, 0, 0, pos, pin_pat, pin_word);
}

inline int max_position(const Word& w) {
  return static_cast<int>(
      std::max_element(w.begin(), w.end()) - w.begin());
}

}  // namespace detail

// True iff some (not necessarily contiguous) subword of w standardizes to
// the pattern.
inline bool contains(const Word& w, const Word& pattern) {
  return detail::match(w, pattern);
}

// A finite antichain of forbidden permutation patterns, with the cached
// facts the tree machinery keeps asking for: the longest pattern length and
// the increasing-/decreasing-child witnesses.
//
// A permutation is a child of an increasing (decreasing) permutation when
// deleting its maximum entry leaves an increasing (decreasing) word.
class PatternBasis {
 public:
  // Builds a basis from the given patterns, dropping duplicates and every
  // pattern that contains another one, so the result is an antichain.
  // Throws std::invalid_argument on an empty input or on an entry sequence
  // that is not a permutation.
  static PatternBasis minimalize(const std::vector<Word>& input) {
    if (input.empty()) {
      throw std::invalid_argument("pattern basis must be nonempty");
    }
    std::vector<Word> uniq;
    for (const Word& p : input) {
      if (!is_permutation_word(p)) {
        throw std::invalid_argument("pattern is not a permutation");
      }
      if (p.empty()) {
        throw std::invalid_argument("pattern must be nonempty");
      }
      if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) {
        uniq.push_back(p);
      }
    }
    std::vector<Word> kept;
    for (const Word& p : uniq) {
      bool minimal = true;
      for (const Word& q : uniq) {
        if (q != p && contains(p, q)) {
          minimal = false;
          break;
        }
      }
      if (minimal) kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(), LenLexLess{});
    return PatternBasis(std::move(kept));
  }

  const std::vector<Word>& patterns() const { return patterns_; }

  // Length of the longest pattern.
  int max_len() const { return max_len_; }

  // True iff the basis forbids the one-point pattern, i.e. the avoidance
  // class is empty.
  bool forbids_everything() const {
    return patterns_.front().size() == 1;
  }

  const std::optional<Word>& inc_child_witness() const { return inc_witness_; }
  const std::optional<Word>& dec_child_witness() const { return dec_witness_; }

  // Upper bound on the number of children any avoider can have, present
  // exactly when the basis holds both a child of an increasing permutation
  // (length k) and a child of a decreasing one (length l): (k-1)(l-1)+1.
  std::optional<int> degree_bound() const {
    if (!inc_witness_ || !dec_witness_) return std::nullopt;
    const int k = static_cast<int>(inc_witness_->size());
    const int l = static_cast<int>(dec_witness_->size());
    return (k - 1) * (l - 1) + 1;
  }

  // True iff deleting the maximum entry leaves an increasing word. The
  // one-point permutation qualifies (the empty word is vacuously sorted).
  static bool is_child_of_increasing(const Word& beta) {
    Word rest = beta;
    rest.erase(rest.begin() + detail::max_position(rest));
    return std::is_sorted(rest.begin(), rest.end());
  }

  static bool is_child_of_decreasing(const Word& beta) {
    Word rest = beta;
    rest.erase(rest.begin() + detail::max_position(rest));
    return std::is_sorted(rest.rbegin(), rest.rend());
  }

 private:
  explicit PatternBasis(std::vector<Word> patterns)
      : patterns_(std::move(patterns)) {
    max_len_ = 0;
    for (const Word& p : patterns_) {
      max_len_ = std::max(max_len_, static_cast<int>(p.size()));
    }
    // Patterns are sorted by length then lex, so the first hit per side is
    // the canonical (shortest, lexicographically least) witness.
    for (const Word& p : patterns_) {
      if (!inc_witness_ && is_child_of_increasing(p)) inc_witness_ = p;
      if (!dec_witness_ && is_child_of_decreasing(p)) dec_witness_ = p;
    }
  }

  std::vector<Word> patterns_;
  int max_len_ = 0;
  std::optional<Word> inc_witness_;
  std::optional<Word> dec_witness_;
};

inline bool avoids_all(const Word& w, const PatternBasis& basis) {
  for (const Word& p : basis.patterns()) {
    if (contains(w, p)) return false;
  }
  return true;
}

// Inserts value m immediately before position site (1-based; site |w|+1
// appends).
inline Word insert_at_site(const Word& w, int site, Entry m) {
  Word out = w;
  out.insert(out.begin() + (site - 1), m);
  return out;
}

// The sites 1..|w|+1 where the new maximum m can be inserted without
// creating a forbidden pattern. Requires m greater than every entry and w
// itself basis-avoiding; under that precondition only patterns whose
// maximum lands on m can appear, so the check is pinned there.
inline std::vector<int> active_sites(const Word& w, Entry m,
                                     const PatternBasis& basis) {
  for (Entry e : w) {
    if (e >= m) {
      throw std::invalid_argument(
          "inserted value must exceed every entry of the word");
    }
  }
  std::vector<int> sites;
  const int n = static_cast<int>(w.size());
  for (int site = 1; site <= n + 1; ++site) {
    const Word child = insert_at_site(w, site, m);
    bool ok = true;
    for (const Word& p : basis.patterns()) {
      if (detail::match(child, p, detail::max_position(p), site - 1)) {
        ok = false;
        break;
      }
    }
    if (ok) sites.push_back(site);
  }
  return sites;
}

// The basis-avoiding words obtained by inserting m at each active site, in
// ascending site order.
inline std::vector<Word> children_words(const Word& w, Entry m,
                                        const PatternBasis& basis) {
  std::vector<Word> kids;
  for (int site : active_sites(w, m, basis)) {
    kids.push_back(insert_at_site(w, site, m));
  }
  return kids;
}

// Children of a permutation in the pattern-avoidance tree: insert n+1 at
// every active site.
inline std::vector<Word> children(const Word& pi, const PatternBasis& basis) {
  return children_words(pi, static_cast<Entry>(pi.size()) + 1, basis);
}

// ---------------------------------------------------------------------------
// Text syntax: digit string ("3241") when every entry is a single digit,
// bracketed comma list ("[3,2,4,1]") otherwise. Bases are comma-separated
// digit strings ("132,3241") or a whitespace-separated list of bracketed
// forms.

inline std::string word_to_string(const Word& w) {
  bool digits = !w.empty();
  for (Entry e : w) {
    if (e > 9) digits = false;
  }
  if (w.empty()) return "[]";
  std::string out;
  if (digits) {
    for (Entry e : w) out.push_back(static_cast<char>('0' + e));
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  out.push_back(']');
  return out;
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// Parses a single permutation in either text form. Throws
// std::invalid_argument on malformed input or when the entries are not
// exactly 1..n.
inline Word parse_perm(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty permutation");
  Word w;
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unbalanced bracket");
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string piece = detail::trim(
          body.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (piece.empty() || piece.size() > 9 ||
          piece.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad entry in bracketed permutation");
      }
      w.push_back(std::stoi(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
      if (pos >= body.size()) {
        throw std::invalid_argument("trailing comma in permutation");
      }
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad character in permutation");
      }
      w.push_back(c - '0');
    }
  }
  if (w.empty() || !is_permutation_word(w)) {
    throw std::invalid_argument("entries are not a permutation of 1..n");
  }
  return w;
}

// Parses a basis string: "132,3241" or "[1,3,2] [3,2,4,1]". Returns the raw
// pattern list; minimalization is the caller's move.
inline std::vector<Word> parse_basis_patterns(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty basis");
  std::vector<Word> out;
  if (s.find('[') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos >= s.size()) break;
      std::size_t end = pos;
      while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end])))
        ++end;
      out.push_back(parse_perm(s.substr(pos, end - pos)));
      pos = end;
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = s.find(',', pos);
      std::string piece =
          s.substr(pos, comma == std::string::npos ? comma : comma - pos);
      piece = detail::trim(piece);
      if (piece.find_first_of(" \t") != std::string::npos) {
        throw std::invalid_argument("whitespace inside pattern");
      }
      out.push_back(parse_perm(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty basis");
  return out;
}

inline PatternBasis parse_basis(const std::string& text) {
  return PatternBasis::minimalize(parse_basis_patterns(text));
}

}  // namespace gentree
