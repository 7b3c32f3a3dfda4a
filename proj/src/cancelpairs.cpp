#include "spotted/cancelpairs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#include "spotted/whitehead.hpp"

namespace spotted {

namespace {

bool disjoint(const SubwordRange& a, const SubwordRange& b) { return a.end <= b.begin || b.end <= a.begin; }

bool strictly_between(const SubwordRange& r, const CancellingPair& p) {
  return r.begin >= p.first.end && r.end <= p.second.begin;
}

void check_cap(const ReducedWord& w, std::size_t cap) {
  if (w.size() > cap) {
    throw CapExceeded("word length " + std::to_string(w.size()) + " exceeds family enumeration cap " +
                      std::to_string(cap));
  }
}

// Simple length of every segment w[b, e), computed on demand.
class SegmentLengths {
 public:
  explicit SegmentLengths(const ReducedWord& w) : w_(w), table_((w.size() + 1) * (w.size() + 1), -1) {}

  int operator()(std::size_t b, std::size_t e) {
    if (b >= e) return 0;
    int& slot = table_[b * (w_.size() + 1) + e];
    if (slot < 0) slot = simple_length_value(w_.subword(b, e));
    return slot;
  }

 private:
  const ReducedWord& w_;
  std::vector<int> table_;
};

int erased_length_with(const ReducedWord& w, const CancellingFamily& family, SegmentLengths& lengths) {
  std::vector<char> erased(w.size(), 0);
  for (const auto& p : family.pairs) {
    for (std::size_t i = p.first.begin; i < p.first.end; ++i) erased[i] = 1;
    for (std::size_t i = p.second.begin; i < p.second.end; ++i) erased[i] = 1;
  }
  int total = static_cast<int>(family.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (erased[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && !erased[j]) ++j;
    total += lengths(i, j);
    i = j;
  }
  return total;
}

}  // namespace

bool is_cancelling_pair(const ReducedWord& w, const CancellingPair& p) {
  const auto& [a, b] = p;
  if (a.size() == 0 || a.size() != b.size() || a.end > b.begin || b.end > w.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (w[b.begin + k] != -w[a.end - 1 - k]) return false;
  }
  return true;
}

bool pairs_compatible(const CancellingPair& p, const CancellingPair& q) {
  const SubwordRange ranges[] = {p.first, p.second, q.first, q.second};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!disjoint(ranges[i], ranges[j])) return false;
    }
  }
  return strictly_between(q.first, p) == strictly_between(q.second, p) &&
         strictly_between(p.first, q) == strictly_between(p.second, q);
}

bool is_nested_family(const ReducedWord& w, const CancellingFamily& family) {
  for (std::size_t i = 0; i < family.pairs.size(); ++i) {
    if (!is_cancelling_pair(w, family.pairs[i])) return false;
    for (std::size_t j = i + 1; j < family.pairs.size(); ++j) {
      if (family.pairs[i] == family.pairs[j] || !pairs_compatible(family.pairs[i], family.pairs[j])) return false;
    }
  }
  return true;
}

std::vector<CancellingPair> cancelling_pairs(const ReducedWord& w) {
  std::vector<CancellingPair> out;
  const std::size_t n = w.size();
  for (std::size_t b1 = 0; b1 < n; ++b1) {
    for (std::size_t e1 = b1 + 1; e1 <= n; ++e1) {
      const std::size_t len = e1 - b1;
      for (std::size_t b2 = e1; b2 + len <= n; ++b2) {
        CancellingPair p{{b1, e1}, {b2, b2 + len}};
        if (is_cancelling_pair(w, p)) out.push_back(p);
      }
    }
  }
  return out;
}

namespace {

enum class Walk { descend, prune, stop };

// Include-or-skip recursion over candidates in canonical order; every family is
// reached exactly once, at the node where its last pair is added. `prune`
// skips the supersets of the current family.
void walk_families(const ReducedWord& w, std::size_t max_pairs,
                   const std::function<Walk(const CancellingFamily&)>& visit) {
  const auto candidates = cancelling_pairs(w);
  CancellingFamily current;
  bool stopped = false;

  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (current.size() >= max_pairs) return;
    for (std::size_t i = from; i < candidates.size() && !stopped; ++i) {
      const auto& cand = candidates[i];
      const bool fits = std::all_of(current.pairs.begin(), current.pairs.end(),
                                    [&](const CancellingPair& p) { return pairs_compatible(p, cand); });
      if (!fits) continue;
      current.pairs.push_back(cand);
      const Walk next = visit(current);
      if (next == Walk::stop) stopped = true;
      if (next == Walk::descend) extend(i + 1);
      current.pairs.pop_back();
    }
  };

  const Walk first = visit(current);
  if (first == Walk::descend) extend(0);
}

}  // namespace

void for_each_nested_family(const ReducedWord& w, std::size_t max_pairs,
                            const std::function<bool(const CancellingFamily&)>& visit, std::size_t cap) {
  check_cap(w, cap);
  walk_families(w, max_pairs, [&](const CancellingFamily& f) { return visit(f) ? Walk::descend : Walk::stop; });
}

std::vector<CancellingFamily> enumerate_nested_families(const ReducedWord& w, std::size_t max_pairs,
                                                        std::size_t cap) {
  std::vector<CancellingFamily> out;
  for_each_nested_family(
      w, max_pairs,
      [&](const CancellingFamily& f) {
        out.push_back(f);
        return true;
      },
      cap);
  return out;
}

std::vector<ReducedWord> erased_segments(const ReducedWord& w, const CancellingFamily& family) {
  std::vector<char> erased(w.size(), 0);
  for (const auto& p : family.pairs) {
    for (std::size_t i = p.first.begin; i < p.first.end; ++i) erased[i] = 1;
    for (std::size_t i = p.second.begin; i < p.second.end; ++i) erased[i] = 1;
  }
  std::vector<ReducedWord> out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (erased[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && !erased[j]) ++j;
    out.push_back(w.subword(i, j));
    i = j;
  }
  return out;
}

int erased_simple_length(const ReducedWord& w, const CancellingFamily& family) {
  if (!is_nested_family(w, family)) {
    throw std::invalid_argument("not a nested family of cancelling pairs for this word");
  }
  SegmentLengths lengths(w);
  return erased_length_with(w, family, lengths);
}

namespace {

// Minimum in tenths: 10 * max{|F|/2 - 1, E/5 - 3} = max{5|F| - 10, 2E - 30}.
// With `stop_at_zero` the search ends as soon as the minimum is <= 0.
std::int64_t lower_bound_tenths(const ReducedWord& w, std::size_t cap, bool stop_at_zero) {
  check_cap(w, cap);
  SegmentLengths lengths(w);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  walk_families(w, w.size(), [&](const CancellingFamily& f) {
    const std::int64_t size_term = 5 * static_cast<std::int64_t>(f.size()) - 10;
    const std::int64_t erased_term = 2 * static_cast<std::int64_t>(erased_length_with(w, f, lengths)) - 30;
    best = std::min(best, std::max(size_term, erased_term));
    if (stop_at_zero && best <= 0) return Walk::stop;
    // Supersets have a size term of at least 5(|F| + 1) - 10.
    return 5 * static_cast<std::int64_t>(f.size() + 1) - 10 >= best ? Walk::prune : Walk::descend;
  });
  return best;
}

}  // namespace

Rational cr_lower_bound(const ReducedWord& w, std::size_t cap) {
  return Rational(std::max<std::int64_t>(lower_bound_tenths(w, cap, true), 0), 10);
}

Rational cr_lower_bound_unfloored(const ReducedWord& w, std::size_t cap) {
  return Rational(lower_bound_tenths(w, cap, false), 10);
}

namespace {

struct CatalogueEntry {
  int cost;
  ConjugateFactor factor;
};

class CrSearch {
 public:
  CrSearch(const ReducedWord& w, const CrSearchBounds& bounds) : w_(w), bounds_(bounds) {
    if (bounds.max_ell < 1 || bounds.max_piece < 0 || bounds.max_conj < 0) {
      throw CapExceeded("conjugate-reduced search bounds must satisfy max_ell >= 1, max_piece >= 0, max_conj >= 0");
    }
    conjugators_ = all_reduced_words_upto(w.rank(), static_cast<std::size_t>(bounds.max_conj));
  }

  ConjugateReducedWitness run() {
    best_.value = simple_length_cached(w_);
    best_.decomposition = {{w_, ReducedWord(w_.rank())}};

    if (auto found = cheapest_conjugate(w_, best_.value - 1)) {
      best_.value = found->cost;
      best_.decomposition = {found->factor};
    }

    for (int ell = 2; ell <= bounds_.max_ell && ell - 1 < best_.value; ++ell) {
      if (catalogue_.empty()) build_catalogue();
      std::vector<ConjugateFactor> chosen;
      descend(ell, ReducedWord(w_.rank()), 0, chosen);
    }
    return best_;
  }

 private:
  void tick(std::uint64_t amount = 1) {
    work_ += amount;
    if (bounds_.work_limit != 0 && work_ > bounds_.work_limit) {
      throw CapExceeded("conjugate-reduced search exceeded its work limit of " + std::to_string(bounds_.work_limit));
    }
  }

  int simple_length_cached(const ReducedWord& v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    const int s = simple_length_value(v);
    memo_.emplace(v, s);
    return s;
  }

  // Cheapest (v, u) with u^-1 v u = f and simple_length(v) <= budget.
  std::optional<CatalogueEntry> cheapest_conjugate(const ReducedWord& f, int budget) {
    std::optional<CatalogueEntry> out;
    if (budget < 0) return out;
    for (const auto& u : conjugators_) {
      tick();
      ReducedWord v = concat(concat(u, f), inverse(u));
      if (v.size() > static_cast<std::size_t>(bounds_.max_piece)) continue;
      const int cost = simple_length_cached(v);
      if (cost <= budget && (!out || cost < out->cost)) {
        out = CatalogueEntry{cost, {std::move(v), u}};
        if (cost == 0) break;
      }
    }
    return out;
  }

  void build_catalogue() {
    static constexpr std::uint64_t kMaxCatalogue = 20'000'000;
    const auto pieces = all_reduced_words_upto(w_.rank(), static_cast<std::size_t>(bounds_.max_piece));
    const std::uint64_t candidates = static_cast<std::uint64_t>(pieces.size()) * conjugators_.size();
    if (candidates > kMaxCatalogue) {
      throw CapExceeded("conjugate-reduced search would enumerate " + std::to_string(candidates) +
                        " factor candidates, above the limit of " + std::to_string(kMaxCatalogue));
    }
    std::unordered_map<ReducedWord, CatalogueEntry, ReducedWordHash> by_element;
    for (const auto& v : pieces) {
      const int cost = simple_length_cached(v);
      for (const auto& u : conjugators_) {
        tick();
        ReducedWord f = conjugate(v, u);
        auto [it, inserted] = by_element.try_emplace(std::move(f), CatalogueEntry{cost, {v, u}});
        if (!inserted && cost < it->second.cost) it->second = CatalogueEntry{cost, {v, u}};
      }
    }
    catalogue_.reserve(by_element.size());
    for (auto& [f, entry] : by_element) catalogue_.emplace_back(f, std::move(entry));
    std::sort(catalogue_.begin(), catalogue_.end(), [](const auto& a, const auto& b) {
      if (a.second.cost != b.second.cost) return a.second.cost < b.second.cost;
      return a.first < b.first;
    });
  }

  void descend(int ell, const ReducedWord& prefix, int cost_so_far, std::vector<ConjugateFactor>& chosen) {
    const int remaining = ell - static_cast<int>(chosen.size());
    // Strict improvement needed: (ell - 1) + cost_so_far + rest <= best - 1.
    const int budget = best_.value - 1 - (ell - 1) - cost_so_far;
    if (budget < 0) return;

    if (remaining == 1) {
      const ReducedWord last = concat(inverse(prefix), w_);
      if (auto found = cheapest_conjugate(last, budget)) {
        best_.value = (ell - 1) + cost_so_far + found->cost;
        best_.decomposition = chosen;
        best_.decomposition.push_back(found->factor);
      }
      return;
    }

    for (const auto& [element, entry] : catalogue_) {
      if (entry.cost > best_.value - 1 - (ell - 1) - cost_so_far) break;
      tick();
      chosen.push_back(entry.factor);
      descend(ell, concat(prefix, element), cost_so_far + entry.cost, chosen);
      chosen.pop_back();
    }
  }

  const ReducedWord& w_;
  CrSearchBounds bounds_;
  std::vector<ReducedWord> conjugators_;
  std::vector<std::pair<ReducedWord, CatalogueEntry>> catalogue_;
  std::unordered_map<ReducedWord, int, ReducedWordHash> memo_;
  ConjugateReducedWitness best_;
  std::uint64_t work_ = 0;
};

}  // namespace

ConjugateReducedWitness cr_bruteforce(const ReducedWord& w, const CrSearchBounds& bounds) {
  return CrSearch(w, bounds).run();
}

int decomposition_value(const std::vector<ConjugateFactor>& decomposition) {
  if (decomposition.empty()) return 0;
  int total = static_cast<int>(decomposition.size()) - 1;
  for (const auto& f : decomposition) total += simple_length_value(f.v);
  return total;
}

ReducedWord decomposition_product(const std::vector<ConjugateFactor>& decomposition, int rank) {
  ReducedWord product(rank);
  for (const auto& f : decomposition) product = concat(product, conjugate(f.v, f.u));
  return product;
}

}  // namespace spotted
