// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spotted/cancelpairs.hpp"
#include "spotted/cli.hpp"
#include "spotted/pushcalc.hpp"
#include "spotted/qicert.hpp"
#include "spotted/torustree.hpp"
#include "spotted/whitehead.hpp"
#include "support.hpp"

using namespace spotted;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Counts failures and keeps the first one for the report.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool cond, const std::function<std::string()>& what) {
    ++checked;
    if (cond) return;
    if (failed++ == 0) first = what();
  }
  Outcome outcome(const std::string& summary) const {
    if (failed == 0) return {true, summary + ", " + std::to_string(checked) + " checks"};
    return {false, std::to_string(failed) + "/" + std::to_string(checked) + " checks failed; first: " + first};
  }
};

// Words of length <= 8 at rank 2, then 10,000 random words of length <= 14 at ranks 3 and 4.
const std::vector<ReducedWord>& simple_length_corpus() {
  static const std::vector<ReducedWord> corpus = [] {
    auto words = all_reduced_words_upto(2, 8);
    std::mt19937_64 rng(20260101);
    for (int i = 0; i < 10000; ++i) words.push_back(testing::random_reduced_upto(rng, 3 + i % 2, 14));
    return words;
  }();
  return corpus;
}

Outcome edge_count() {
  Tally t;
  for (const auto& w : all_reduced_words_upto(2, 6)) {
    const auto expected = w.empty() ? 0 : w.size() - 1;
    t.expect(whitehead_graph(w).edge_count() == expected, [&] { return "'" + to_string(w) + "'"; });
  }
  return t.outcome("all reduced words of length <= 6, g=2");
}

Outcome dp_matches_bruteforce() {
  Tally t;
  for (const auto& w : simple_length_corpus()) {
    const int dp = simple_length(w).value;
    const int brute = simple_length_bruteforce(w, 14);
    t.expect(dp == brute, [&] {
      return "'" + to_string(w) + "' dp " + std::to_string(dp) + " brute " + std::to_string(brute);
    });
  }
  return t.outcome(std::to_string(simple_length_corpus().size()) + " words");
}

Outcome simple_length_laws() {
  Tally t;
  for (const auto& w : simple_length_corpus()) {
    const int s = simple_length(w).value;
    t.expect(simple_length(inverse(w)).value == s, [&] { return "inverse '" + to_string(w) + "'"; });
    for (const auto& r : subwords(w)) {
      const auto v = w.subword(r.begin, r.end);
      t.expect(simple_length(v).value <= s, [&] { return "subword of '" + to_string(w) + "'"; });
    }
    // w = uv at every split point.
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      const int left = simple_length(w.subword(0, cut)).value;
      const int right = simple_length(w.subword(cut, w.size())).value;
      t.expect(s <= left + right + 1, [&] { return "split of '" + to_string(w) + "' at " + std::to_string(cut); });
    }
  }
  return t.outcome("monotone, subadditive +1, inverse symmetric");
}

Outcome cr_sandwich() {
  constexpr std::size_t wanted = 500;
  constexpr std::size_t max_draws = 20000;
  const CrSearchBounds base;
  const CrSearchBounds doubled = base.doubled();

  Tally t;
  std::mt19937_64 rng(20260202);
  std::size_t kept = 0, unstable = 0, capped = 0, draws = 0;
  while (kept < wanted && draws < max_draws) {
    ++draws;
    const auto w = testing::random_reduced_upto(rng, 2, 12);
    int at_base = 0, at_double = 0;
    try {
      at_base = cr_bruteforce(w, base).value;
      at_double = cr_bruteforce(w, doubled).value;
    } catch (const CapExceeded&) {
      ++capped;
      continue;
    }
    if (at_base != at_double) {
      ++unstable;
      continue;
    }
    ++kept;
    const Rational lower = cr_lower_bound(w);
    const int simple = simple_length(w).value;
    t.expect(lower <= Rational(at_base) && at_base <= simple, [&] {
      return "'" + to_string(w) + "' lower " + to_string(lower) + " cr " + std::to_string(at_base) + " simple " +
             std::to_string(simple);
    });
  }
  t.expect(kept == wanted, [&] { return "only " + std::to_string(kept) + " stable words"; });
  return t.outcome(std::to_string(kept) + " stable words from " + std::to_string(draws) + " draws (" +
                   std::to_string(unstable) + " changed under doubled caps, " + std::to_string(capped) +
                   " over cap)");
}

Outcome bt_lower_bound() {
  Tally t;
  std::string values;
  for (int tt : {1, 2}) {
    for (int s : {1, 2, 3}) {
      const int sl = simple_length(power(make_bt(4, tt), s)).value;
      values += " t" + std::to_string(tt) + "s" + std::to_string(s) + "=" + std::to_string(sl);
      t.expect(sl >= s, [&] { return "b_" + std::to_string(tt) + "^" + std::to_string(s); });
    }
  }
  return t.outcome("simple lengths" + values);
}

Outcome qi_certificate() {
  // Smallest lower/displacement ratio seen on each grid, kept as a regression check.
  const Rational baseline[] = {Rational(1, 2), Rational(1, 2)};
  Tally t;
  std::string report;
  for (int n : {1, 2}) {
    CertifyOptions o;
    o.g = 4;
    o.n = n;
    o.grid_max = 2;
    const auto rows = certify_grid(o);
    std::optional<Rational> min_ratio;
    for (const auto& r : rows) {
      std::int64_t closed = 0;
      long displacement = 0;
      for (std::size_t i = 0; i < r.k.size(); ++i) {
        const long d = std::abs(r.k[i] - r.l[i]);
        closed += 6 * d + 8;
        displacement += d;
      }
      const Rational lower(simple_length(relative_word(4, r.k, r.l)).value, 2);
      t.expect(lower <= Rational(closed) && r.upper == closed && r.lower == lower, [&] {
        return format_point(r.k) + " -> " + format_point(r.l);
      });
      if (displacement > 0) {
        const Rational ratio = lower / Rational(displacement);
        if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
      }
    }
    std::set<ReducedWord> images;
    std::set<LatticePoint> points;
    for (const auto& r : rows) {
      points.insert(r.k);
      images.insert(lambda_word(4, r.k));
    }
    t.expect(images.size() == points.size(), [&] { return "lambda not injective at n=" + std::to_string(n); });
    t.expect(min_ratio && *min_ratio > Rational(0), [&] { return "zero min ratio at n=" + std::to_string(n); });
    t.expect(min_ratio && *min_ratio == baseline[n - 1], [&] {
      return "min ratio " + to_string(*min_ratio) + " differs from baseline " + to_string(baseline[n - 1]);
    });
    report += " n=" + std::to_string(n) + ": " + std::to_string(rows.size()) + " rows, min ratio " +
              (min_ratio ? to_string(*min_ratio) : "none") + ";";
  }
  report.pop_back();
  return t.outcome("g=4 grid 2," + report);
}

Outcome push_laws() {
  Tally t;
  std::mt19937_64 rng(20260303);
  for (int i = 0; i < 10000; ++i) {
    const int rank = 2 + i % 3;
    const ArcLabel a{testing::random_reduced_upto(rng, rank, 8)};
    const auto u = testing::random_reduced_upto(rng, rank, 6);
    const auto v = testing::random_reduced_upto(rng, rank, 6);
    const auto uv = ReducedWord::reduce(
        [&] {
          std::vector<Letter> l(u.letters().begin(), u.letters().end());
          l.insert(l.end(), v.letters().begin(), v.letters().end());
          return l;
        }(),
        rank);
    t.expect(push_arc(a, ReducedWord(rank)) == a, [&] { return "identity"; });
    t.expect(push_arc(push_arc(a, u), v) == push_arc(a, uv), [&] { return "compatibility at triple " + std::to_string(i); });
    // Free: only the trivial loop fixes an arc.
    t.expect((push_arc(a, u) == a) == u.empty(), [&] { return "stabiliser at triple " + std::to_string(i); });
    const ArcLabel b = push_arc(a, v);
    t.expect(push_arc(a, q_class(a, b)) == b, [&] { return "q recovery at triple " + std::to_string(i); });
    t.expect(q_class(a, b) == v, [&] { return "q value at triple " + std::to_string(i); });

    const auto n = disk_normalize(a.word);
    t.expect(disk_normalize(n.coset_rep) == n, [&] { return "normalize idempotent"; });
    const auto c = ReducedWord::reduce({static_cast<Letter>(default_c_index(rank))}, rank);
    const long k = std::uniform_int_distribution<long>(-3, 3)(rng);
    t.expect(disk_normalize(power(c, k) * a.word) == n, [&] { return "normalize c-invariant"; });
  }
  return t.outcome("10000 triples at g in {2,3,4}");
}

Outcome torus_tree() {
  Tally t;
  std::size_t balls = 0;
  for (int r = 0; r <= 4; ++r) {
    for (int v = 1; v <= 4; ++v) {
      for (int l = 0; l <= 3; ++l) {
        const auto ball = build_ball(r, v, l);
        const auto check = check_ball(ball);
        ++balls;
        const auto name = [&] {
          return "r" + std::to_string(r) + " v" + std::to_string(v) + " l" + std::to_string(l);
        };
        t.expect(check.connected && check.acyclic, name);
        t.expect(ball.edges.size() + 1 == ball.vertices.size(), name);
        t.expect(check.separating_leaves_ok, name);
        for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
          if (ball.vertices[i].separating) t.expect(ball.degree(i) == 1, name);
        }
      }
    }
  }
  return t.outcome(std::to_string(balls) + " balls");
}

Outcome trace_audit() {
  Tally t;
  std::mt19937_64 rng(20260404);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    LatticePoint k, l;
    for (int j = dim(rng); j > 0; --j) {
      k.push_back(coord(rng));
      l.push_back(coord(rng));
    }
    const auto budget = i % 2 ? PushBudget::large_genus : PushBudget::conservative;
    const auto trace = upper_bound(k, l, 4, budget);
    std::int64_t sum = 0, closed = 0;
    for (const auto& s : trace.steps) sum += s.increment;
    for (std::size_t j = 0; j < k.size(); ++j) closed += static_cast<std::int64_t>(budget) * std::abs(k[j] - l[j]) + 8;
    t.expect(sum == trace.total && trace.total == closed,
             [&] { return format_point(k) + " -> " + format_point(l); });
  }

  // All labels over short words at rank 2, both sides.
  std::vector<PushLabel> labels;
  for (const auto& w : all_reduced_words_upto(2, 2)) {
    labels.push_back(PushLabel::side2(w));
    labels.push_back(PushLabel::side1(w));
  }
  std::size_t fired = 0;
  for (const auto& x : labels) {
    for (const auto& y : labels) {
      const bool pattern = x.side != y.side && x.word == inverse(y.word);
      const auto b = sphere_equiv_bound(x, y);
      if (x == y) {
        t.expect(b && b->total == 0 && b->steps.empty(), [&] { return "equal labels " + to_string(x); });
      } else if (pattern) {
        ++fired;
        t.expect(b && b->total == 2 && b->steps.size() == 1 && b->steps[0].rule == BoundRule::point_commute,
                 [&] { return "pattern " + to_string(x) + " / " + to_string(y); });
      } else {
        t.expect(!b, [&] { return "spurious " + to_string(x) + " / " + to_string(y); });
      }
    }
  }
  return t.outcome("1000 traces, pattern fired on " + std::to_string(fired) + " of " +
                   std::to_string(labels.size() * labels.size()) + " label pairs");
}

Outcome cli_determinism() {
  Tally t;
  for (const char* n : {"1", "2"}) {
    std::string outputs[2];
    int codes[2];
    const char* jobs[] = {"1", "8"};
    for (int j = 0; j < 2; ++j) {
      std::ostringstream out, err;
      codes[j] = cli::run({"qi-cert", "--rank", "4", "--n", n, "--grid-max", "2", "--jobs", jobs[j]}, out, err);
      outputs[j] = out.str();
    }
    t.expect(codes[0] == 0 && codes[1] == 0, [&] { return std::string("exit code at n=") + n; });
    t.expect(!outputs[0].empty() && outputs[0] == outputs[1], [&] { return std::string("output differs at n=") + n; });
  }
  return t.outcome("qi-cert n in {1,2}, jobs 1 vs 8");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "whitehead edge count", 10, edge_count},
      {2, "simple length dp = brute force", 120, dp_matches_bruteforce},
      {3, "simple length subword/split/inverse laws", 120, simple_length_laws},
      {4, "cr sandwich", 300, cr_sandwich},
      {5, "b_t simple length lower bound", 60, bt_lower_bound},
      {6, "qi certificate sandwich", 300, qi_certificate},
      {7, "push action laws", 60, push_laws},
      {8, "torus disk tree", 10, torus_tree},
      {9, "bound trace audit", 60, trace_audit},
      {10, "cli determinism", 120, cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << timing << "] " << o.detail
              << (in_time ? "" : " (over time limit)") << '\n'
              << std::flush;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
