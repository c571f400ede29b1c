#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gentree/labeler.hpp"
#include "gentree/rational.hpp"

namespace gentree {

// Child production between labels: entry (i, j) counts how many children
// labeled order[j] a node labeled order[i] produces. Row sums are node
// degrees, so they respect the basis degree bound.
struct TransferMatrix {
  std::vector<Word> order;  // labels, length-then-lex
  std::vector<std::vector<long long>> counts;
  int root_index = 0;
};

inline TransferMatrix to_matrix(const GeneratingTreeSpec& spec) {
  if (spec.empty()) {
    throw std::invalid_argument("empty spec has no transfer matrix");
  }
  TransferMatrix tm;
  std::map<Word, int, LenLexLess> index;
  for (const auto& [label, kids] : spec.rules) {
    index.emplace(label, static_cast<int>(tm.order.size()));
    tm.order.push_back(label);
  }
  const int n = static_cast<int>(tm.order.size());
  tm.counts.assign(n, std::vector<long long>(n, 0));
  for (const auto& [label, kids] : spec.rules) {
    const int i = index.at(label);
    for (const Word& kid : kids) {
      auto it = index.find(kid);
      if (it == index.end()) {
        throw std::invalid_argument("rule references a label with no rule");
      }
      tm.counts[i][it->second] += 1;
    }
  }
  tm.root_index = index.at(*spec.root);
  return tm;
}

namespace detail {

inline std::vector<std::vector<RationalFn>> identity_minus_x(
    const TransferMatrix& tm) {
  const int n = static_cast<int>(tm.order.size());
  std::vector<std::vector<RationalFn>> a(n, std::vector<RationalFn>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntPoly entry = (i == j) ? IntPoly(1) : IntPoly(0);
      entry = entry - IntPoly::monomial(tm.counts[i][j], 1);
      a[i][j] = RationalFn(std::move(entry));
    }
  }
  return a;
}

}  // namespace detail

// Solves (I - xM) v = all-ones exactly over the rational-function field.
// Entry v[i] is the generating function, by depth, for the subtree hanging
// under a node labeled order[i].
inline std::vector<RationalFn> transfer_solve(const TransferMatrix& tm) {
  const int n = static_cast<int>(tm.order.size());
  auto a = detail::identity_minus_x(tm);
  std::vector<RationalFn> b(n, RationalFn(IntPoly(1)));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      // det(I - xM) has constant term 1, so this cannot happen for real
      // transfer matrices.
      throw std::domain_error("singular transfer system");
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      const RationalFn f = a[row][col] / a[col][col];
      for (int j = col; j < n; ++j) {
        a[row][j] = a[row][j] - f * a[col][j];
      }
      b[row] = b[row] - f * b[col];
    }
  }
  std::vector<RationalFn> v(n);
  for (int i = n - 1; i >= 0; --i) {
    RationalFn acc = b[i];
    for (int j = i + 1; j < n; ++j) {
      acc = acc - a[i][j] * v[j];
    }
    v[i] = acc / a[i][i];
  }
  return v;
}

// The generating function counting avoiders by length: x times the root's
// subtree series. The empty spec counts nothing.
inline RationalFn rational_gf(const GeneratingTreeSpec& spec) {
  if (spec.empty()) return RationalFn();
  const TransferMatrix tm = to_matrix(spec);
  const std::vector<RationalFn> v = transfer_solve(tm);
  return RationalFn(IntPoly::variable()) * v[tm.root_index];
}

// det(I - xM) by fraction-free (Bareiss) elimination in Z[x]. Not on the
// generating-function path; it gives an independent algebraic handle on the
// solve.
inline IntPoly char_det(const TransferMatrix& tm) {
  const int n = static_cast<int>(tm.order.size());
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = (i == j ? IntPoly(1) : IntPoly(0)) -
                IntPoly::monomial(tm.counts[i][j], 1);
    }
  }
  IntPoly prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return IntPoly(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] =
            IntPoly::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = IntPoly(0);
    }
    prev = m[k][k];
  }
  IntPoly det = n == 0 ? IntPoly(1) : m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace gentree
