#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "spotted/pushcalc.hpp"
#include "spotted/rational.hpp"
#include "spotted/words.hpp"

namespace spotted {

/// b_t = x1^{t+1} x2^{t+1} ... xg^{t+1} x1^{t+1} x2^{t+1} x1^{t+1}; requires g >= 4, t >= 1.
ReducedWord make_bt(int g, int t);

using LatticePoint = std::vector<long>;

/// Chooses which b_t drives coordinate i (1-based). The default is t = i.
using TAssignment = std::function<int(int coordinate)>;
inline int default_t_assignment(int coordinate) { return coordinate; }

/// reduce(b_{t(1)}^{k_1} ... b_{t(n)}^{k_n}).
ReducedWord lambda_word(int g, const LatticePoint& k, const TAssignment& t_of = default_t_assignment);

/// reduce(b_n^{-k_n} ... b_1^{-k_1} b_1^{l_1} ... b_n^{l_n}).
ReducedWord relative_word(int g, const LatticePoint& k, const LatticePoint& l,
                          const TAssignment& t_of = default_t_assignment);

/// Per-power displacement budget for pushing the base disk along b_t:
/// 6 is the general argument, 4 the sharper one available for g >= 6.
enum class PushBudget { conservative = 6, large_genus = 4 };

/// sum_i (budget * |k_i - l_i| + 8), with the step-by-step derivation. Throws
/// std::invalid_argument on a length mismatch.
BoundTrace upper_bound(const LatticePoint& k, const LatticePoint& l, int g = 4,
                       PushBudget budget = PushBudget::conservative,
                       const TAssignment& t_of = default_t_assignment);

struct CertificateRow {
  LatticePoint k;
  LatticePoint l;
  long displacement = 0;
  ReducedWord relative{2};
  Rational lower;
  std::int64_t upper = 0;
  /// lower / displacement; zero when displacement == 0.
  Rational ratio;
};

struct CertifyOptions {
  int g = 4;
  int n = 1;
  int grid_max = 2;
  unsigned jobs = 1;
  /// Longest relative word the simple-length DP is asked to handle.
  std::size_t max_word_length = 512;
  PushBudget budget = PushBudget::conservative;
  TAssignment t_of = default_t_assignment;
};

struct CertificateSummary {
  std::size_t rows = 0;
  std::size_t moving_rows = 0;  // displacement > 0
  Rational min_ratio;
  Rational max_ratio;
  bool sandwich_holds = true;
  bool injective = true;
};

/// One row per unordered pair k <= l of {0..grid_max}^n (diagonal included), in
/// lexicographic order of (k, l) regardless of `jobs`. Throws CapExceeded when a
/// relative word is longer than max_word_length or the parameters are outside
/// g >= 4, n >= 1, grid_max >= 0.
std::vector<CertificateRow> certify_grid(const CertifyOptions& options);

CertificateSummary summarize(const std::vector<CertificateRow>& rows, const CertifyOptions& options);

/// Header `n,g,k,l,displacement,lower,upper,ratio`; vectors joined with ';'.
std::string to_csv(const std::vector<CertificateRow>& rows, int n, int g);

std::string format_point(const LatticePoint& p);

}  // namespace spotted
