#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "spotted/rational.hpp"
#include "spotted/words.hpp"

namespace spotted {

/// Two disjoint ranges of a host word, the second spelling the inverse of the first.
struct CancellingPair {
  SubwordRange first;
  SubwordRange second;
  friend bool operator==(const CancellingPair&, const CancellingPair&) = default;
};

struct CancellingFamily {
  std::vector<CancellingPair> pairs;
  std::size_t size() const { return pairs.size(); }
};

bool is_cancelling_pair(const ReducedWord& w, const CancellingPair& p);

/// Two pairs can coexist in a nested family: their four ranges are disjoint and
/// neither pair separates the two halves of the other.
bool pairs_compatible(const CancellingPair& p, const CancellingPair& q);

bool is_nested_family(const ReducedWord& w, const CancellingFamily& family);

/// Every cancelling pair of w, ordered by (first.begin, first.end, second.begin).
std::vector<CancellingPair> cancelling_pairs(const ReducedWord& w);

inline constexpr std::size_t kDefaultFamilyCap = 20;

/// Visits every nested family with at most `max_pairs` pairs, starting with the
/// empty family. The visitor returns false to stop early. Each call restarts
/// from scratch. Throws CapExceeded when w is longer than `cap`.
void for_each_nested_family(const ReducedWord& w, std::size_t max_pairs,
                            const std::function<bool(const CancellingFamily&)>& visit,
                            std::size_t cap = kDefaultFamilyCap);

std::vector<CancellingFamily> enumerate_nested_families(const ReducedWord& w, std::size_t max_pairs,
                                                        std::size_t cap = kDefaultFamilyCap);

/// Segments of w left after erasing every range of the family, in order.
std::vector<ReducedWord> erased_segments(const ReducedWord& w, const CancellingFamily& family);

/// |F| plus the simple length of every segment of w - F.
/// Throws std::invalid_argument when the family is not a nested family for w.
int erased_simple_length(const ReducedWord& w, const CancellingFamily& family);

/// min over nested families F of max{|F|/2 - 1, erased_simple_length/5 - 3}, floored at 0.
Rational cr_lower_bound(const ReducedWord& w, std::size_t cap = kDefaultFamilyCap);
/// The same minimum without the floor at 0.
Rational cr_lower_bound_unfloored(const ReducedWord& w, std::size_t cap = kDefaultFamilyCap);

struct CrSearchBounds {
  int max_ell = 3;
  int max_piece = 6;
  int max_conj = 3;
  /// Upper limit on candidate evaluations; 0 means unlimited.
  std::uint64_t work_limit = 0;

  CrSearchBounds doubled() const { return {2 * max_ell, 2 * max_piece, 2 * max_conj, work_limit}; }
};

struct ConjugateFactor {
  ReducedWord v;
  ReducedWord u;
};

struct ConjugateReducedWitness {
  int value = 0;
  /// Factors v_j^{u_j} = u_j^-1 v_j u_j whose product reduces to the host word.
  std::vector<ConjugateFactor> decomposition;
};

/// Minimum of (l - 1) + sum simple_length(v_j) over decompositions
/// w = v_1^{u_1} ... v_l^{u_l} with l <= max_ell, |v_j| <= max_piece and
/// |u_j| <= max_conj. The trivial decomposition (w, e) is always admitted, so
/// the result never exceeds simple_length(w). This is an upper approximation of
/// the unbounded minimum.
///
/// Throws CapExceeded if the bounds are invalid, if a factor catalogue would be
/// too large to materialise, or if work_limit is hit.
ConjugateReducedWitness cr_bruteforce(const ReducedWord& w, const CrSearchBounds& bounds = {});

/// Value of a decomposition: (l - 1) + sum of simple lengths. Does not check the product.
int decomposition_value(const std::vector<ConjugateFactor>& decomposition);
/// Free reduction of the product of the conjugates.
ReducedWord decomposition_product(const std::vector<ConjugateFactor>& decomposition, int rank);

}  // namespace spotted
