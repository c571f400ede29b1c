#pragma once

#include <string>

#include "gentree/labeler.hpp"
#include "gentree/oracle.hpp"
#include "gentree/transfer.hpp"

namespace gentree {
namespace oracle {

struct CrosscheckResult {
  bool pass = true;
  int first_mismatch_length = 0;  // 0 when everything agrees
  std::string detail;
};

// Brute-force counts against the series of the generating function and the
// labeled tree's own level iteration, length by length. Reports the first
// length where any pair of routes disagrees.
inline CrosscheckResult crosscheck(const PatternBasis& basis, int n_max,
                                   const GeneratingTreeSpec& spec,
                                   int hard_limit = kDefaultHardLimit) {
  const auto report = brute_count(basis, n_max, hard_limit);
  const auto coeffs = series(rational_gf(spec), n_max);
  const auto tree = spec_level_counts(spec, n_max - 1);
  for (int n = 1; n <= n_max; ++n) {
    const BigInt oracle_n(report.counts[n - 1]);
    const BigInt& series_n = coeffs[n - 1];
    const BigInt& tree_n = tree[n - 1];
    if (oracle_n != series_n || oracle_n != tree_n) {
      return {false, n,
              "length " + std::to_string(n) + ": oracle=" + oracle_n.str() +
                  " series=" + series_n.str() + " tree=" + tree_n.str()};
    }
  }
  return {};
}

// Same, but against a bare generating function.
inline CrosscheckResult crosscheck(const PatternBasis& basis, int n_max,
                                   const RationalFn& gf,
                                   int hard_limit = kDefaultHardLimit) {
  const auto report = brute_count(basis, n_max, hard_limit);
  const auto coeffs = series(gf, n_max);
  for (int n = 1; n <= n_max; ++n) {
    const BigInt oracle_n(report.counts[n - 1]);
    if (oracle_n != coeffs[n - 1]) {
      return {false, n,
              "length " + std::to_string(n) + ": oracle=" + oracle_n.str() +
                  " series=" + coeffs[n - 1].str()};
    }
  }
  return {};
}

}  // namespace oracle
}  // namespace gentree
