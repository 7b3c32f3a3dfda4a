#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spotted/rational.hpp"
#include "spotted/words.hpp"

namespace spotted {

// Arcs from p1 to p2 are identified with elements of the based fundamental
// group; point pushing p2 along a loop acts by right concatenation.

struct ArcLabel {
  ReducedWord word;
  friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
};

ArcLabel push_arc(const ArcLabel& arc, const ReducedWord& loop);

/// The based loop alpha^-1 beta, read left to right.
ReducedWord q_class(const ArcLabel& alpha, const ArcLabel& beta);

/// A disk enclosing both spots: the right coset <c> w, stored by its
/// representative without a leading power of c.
struct DiskLabel {
  ReducedWord coset_rep;
  int c_index;
  friend bool operator==(const DiskLabel&, const DiskLabel&) = default;
};

/// Default distinguished generator: the last basis element.
inline int default_c_index(int rank) { return rank; }

DiskLabel disk_normalize(const ReducedWord& w, int c_index);
inline DiskLabel disk_normalize(const ReducedWord& w) { return disk_normalize(w, default_c_index(w.rank())); }

/// Pushing p2 along a loop; well defined on cosets.
DiskLabel push_disk(const DiskLabel& disk, const ReducedWord& loop);

/// [a, u]_2 (push p2 along u) or [a^-1, u]_1 (push p1 along Psi(u)). Psi acts
/// as the identity on words; the side tag carries the distinction.
struct PushLabel {
  enum class Side { one, two };

  Side side;
  ReducedWord word;

  static PushLabel side2(ReducedWord u) { return {Side::two, std::move(u)}; }
  static PushLabel side1(ReducedWord u) { return {Side::one, std::move(u)}; }

  std::string_view base() const { return side == Side::two ? "a" : "a^-1"; }
  friend bool operator==(const PushLabel&, const PushLabel&) = default;
};

std::string to_string(const PushLabel& label);

/// Generator a*u of the infinite cyclic factor in F_{g+1} = F_g * Z, where a is
/// the letter x_{g+1}.
class SplittingLabel {
 public:
  /// The splitting of the base disk: generator a.
  static SplittingLabel initial(int base_rank);

  int base_rank() const { return base_rank_; }
  const ReducedWord& z_generator() const { return z_; }
  /// The F_g part u of a*u.
  ReducedWord tail() const;

  friend bool operator==(const SplittingLabel&, const SplittingLabel&) = default;

 private:
  friend SplittingLabel splitting_update(const SplittingLabel&, const ReducedWord&);
  SplittingLabel(int base_rank, ReducedWord z) : base_rank_(base_rank), z_(std::move(z)) {}

  int base_rank_;
  ReducedWord z_;
};

/// Replaces a*t by a*(t*u). `pushclass` is either a rank-g word or a rank-(g+1)
/// word free of the letter a; anything else throws RankError.
SplittingLabel splitting_update(const SplittingLabel& current, const ReducedWord& pushclass);

enum class BoundRule { point_commute, distance_estimate, isometric_relabel, triangle };

std::string_view rule_name(BoundRule rule);

struct BoundStep {
  BoundRule rule;
  std::string anchor;
  std::int64_t increment;
};

/// Audit log of inequality applications. Every bound here is an upper bound on
/// a pseudo-distance; nothing claims an exact distance.
struct BoundTrace {
  std::vector<BoundStep> steps;
  std::int64_t total = 0;

  void append(BoundRule rule, std::string anchor, std::int64_t increment);
  void append(const BoundTrace& other);
  /// Rule, anchor, increment and running total, one row per step.
  std::string to_table() const;
};

/// Bound for a pair of push labels, or nullopt if no rule applies. Equal labels
/// give an empty trace; the pair ([a,u]_2, [a^-1,u^-1]_1) in either order gives 2.
std::optional<BoundTrace> sphere_equiv_bound(const PushLabel& lhs, const PushLabel& rhs);

/// From a bound on ([a,b1]_2, [a,b2]_2), bound ([a,c b1]_2, [a,c b2]_2) by adding 8:
/// swap sides (+4), push p1 along Psi(c) (isometry), swap back (+4).
BoundTrace precompose_bound(const ReducedWord& b1, const ReducedWord& b2, const ReducedWord& prefix,
                            const BoundTrace& base);
BoundTrace precompose_bound(const ReducedWord& b1, const ReducedWord& b2, const ReducedWord& prefix,
                            std::int64_t base_bound);

/// Half the simple length: a lower bound on the sphere-graph distance between
/// two spheres whose relative class is w.
Rational simple_length_lower_bound(const ReducedWord& w);

}  // namespace spotted
