#include "spotted/pushcalc.hpp"

#include <algorithm>
#include <sstream>

#include "spotted/whitehead.hpp"

namespace spotted {

namespace {

std::string show(const ReducedWord& w) { return w.empty() ? "e" : to_string(w); }

}  // namespace

ArcLabel push_arc(const ArcLabel& arc, const ReducedWord& loop) { return {concat(arc.word, loop)}; }

ReducedWord q_class(const ArcLabel& alpha, const ArcLabel& beta) { return concat(inverse(alpha.word), beta.word); }

DiskLabel disk_normalize(const ReducedWord& w, int c_index) {
  if (c_index < 1 || c_index > w.rank()) {
    throw RankError("distinguished generator index " + std::to_string(c_index) + " outside 1.." +
                    std::to_string(w.rank()));
  }
  std::size_t strip = 0;
  while (strip < w.size() && (w[strip] == c_index || w[strip] == -c_index)) ++strip;
  return {w.subword(strip, w.size()), c_index};
}

DiskLabel push_disk(const DiskLabel& disk, const ReducedWord& loop) {
  return disk_normalize(concat(disk.coset_rep, loop), disk.c_index);
}

std::string to_string(const PushLabel& label) {
  return "[" + std::string(label.base()) + ", " + show(label.word) + "]" +
         (label.side == PushLabel::Side::two ? "_2" : "_1");
}

SplittingLabel SplittingLabel::initial(int base_rank) {
  return SplittingLabel(base_rank, ReducedWord::reduce({base_rank + 1}, base_rank + 1));
}

ReducedWord SplittingLabel::tail() const {
  const auto letters = z_.letters();
  return ReducedWord::reduce(std::span<const Letter>(letters).subspan(1), base_rank_);
}

SplittingLabel splitting_update(const SplittingLabel& current, const ReducedWord& pushclass) {
  const int g = current.base_rank();
  ReducedWord lifted = pushclass;
  if (pushclass.rank() == g) {
    lifted = pushclass.lifted(g + 1);
  } else if (pushclass.rank() == g + 1) {
    const auto letters = pushclass.letters();
    if (std::any_of(letters.begin(), letters.end(), [&](Letter l) { return l == g + 1 || l == -(g + 1); })) {
      throw RankError("push class must lie in the rank-" + std::to_string(g) + " factor (contains the letter a)");
    }
  } else {
    throw RankError("push class rank " + std::to_string(pushclass.rank()) + " does not match base rank " +
                    std::to_string(g));
  }
  return SplittingLabel(g, concat(current.z_generator(), lifted));
}

std::string_view rule_name(BoundRule rule) {
  switch (rule) {
    case BoundRule::point_commute: return "point-commute";
    case BoundRule::distance_estimate: return "distance-estimate";
    case BoundRule::isometric_relabel: return "isometric-relabel";
    case BoundRule::triangle: return "triangle";
  }
  return "?";
}

void BoundTrace::append(BoundRule rule, std::string anchor, std::int64_t increment) {
  steps.push_back({rule, std::move(anchor), increment});
  total += increment;
}

void BoundTrace::append(const BoundTrace& other) {
  for (const auto& s : other.steps) append(s.rule, s.anchor, s.increment);
}

std::string BoundTrace::to_table() const {
  std::ostringstream out;
  out << "step\trule\tincrement\trunning\tanchor\n";
  std::int64_t running = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    running += steps[i].increment;
    out << i + 1 << '\t' << rule_name(steps[i].rule) << '\t' << steps[i].increment << '\t' << running << '\t'
        << steps[i].anchor << '\n';
  }
  out << "total\t\t\t" << total << '\n';
  return out.str();
}

std::optional<BoundTrace> sphere_equiv_bound(const PushLabel& lhs, const PushLabel& rhs) {
  if (lhs == rhs) return BoundTrace{};
  const PushLabel* two = lhs.side == PushLabel::Side::two ? &lhs : &rhs;
  const PushLabel* one = two == &lhs ? &rhs : &lhs;
  if (two->side != PushLabel::Side::two || one->side != PushLabel::Side::one) return std::nullopt;
  if (two->word.rank() != one->word.rank() || one->word != inverse(two->word)) return std::nullopt;
  BoundTrace trace;
  trace.append(BoundRule::point_commute, "d(" + to_string(*two) + ", " + to_string(*one) + ") <= 2", 2);
  return trace;
}

BoundTrace precompose_bound(const ReducedWord& b1, const ReducedWord& b2, const ReducedWord& prefix,
                            const BoundTrace& base) {
  if (b1.rank() != b2.rank() || b1.rank() != prefix.rank()) {
    throw RankError("precompose_bound: rank mismatch");
  }
  const ReducedWord c_inv = inverse(prefix);
  const auto cb1 = PushLabel::side2(concat(prefix, b1));
  const auto cb2 = PushLabel::side2(concat(prefix, b2));
  const auto swapped1 = PushLabel::side1(concat(inverse(b1), c_inv));
  const auto swapped2 = PushLabel::side1(concat(inverse(b2), c_inv));
  const auto bare1 = PushLabel::side1(inverse(b1));
  const auto bare2 = PushLabel::side1(inverse(b2));

  BoundTrace trace = base;
  trace.append(BoundRule::point_commute,
               "d(" + to_string(cb1) + ", " + to_string(cb2) + ") <= d(" + to_string(swapped1) + ", " +
                   to_string(swapped2) + ") + 4",
               4);
  trace.append(BoundRule::isometric_relabel,
               "push p1 along Psi(" + show(prefix) + "): d(" + to_string(swapped1) + ", " + to_string(swapped2) +
                   ") = d(" + to_string(bare1) + ", " + to_string(bare2) + ")",
               0);
  trace.append(BoundRule::point_commute,
               "d(" + to_string(bare1) + ", " + to_string(bare2) + ") <= d(" +
                   to_string(PushLabel::side2(b1)) + ", " + to_string(PushLabel::side2(b2)) + ") + 4",
               4);
  return trace;
}

BoundTrace precompose_bound(const ReducedWord& b1, const ReducedWord& b2, const ReducedWord& prefix,
                            std::int64_t base_bound) {
  BoundTrace base;
  base.append(BoundRule::triangle,
              "given: d(" + to_string(PushLabel::side2(b1)) + ", " + to_string(PushLabel::side2(b2)) +
                  ") <= " + std::to_string(base_bound),
              base_bound);
  return precompose_bound(b1, b2, prefix, base);
}

Rational simple_length_lower_bound(const ReducedWord& w) { return Rational(simple_length_value(w), 2); }

}  // namespace spotted
