#pragma once

// Test-only generators and reference implementations. Nothing here calls into
// the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "spotted/cancelpairs.hpp"
#include "spotted/whitehead.hpp"
#include "spotted/words.hpp"

namespace spotted::testing {

inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, std::size_t length) {
  std::uniform_int_distribution<int> index(1, rank);
  std::bernoulli_distribution negative(0.5);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(index(rng) * (negative(rng) ? -1 : 1));
  return out;
}

/// Uniformly random reduced word of exactly `length` letters.
inline ReducedWord random_reduced(std::mt19937_64& rng, int rank, std::size_t length) {
  std::uniform_int_distribution<int> index(1, rank);
  std::bernoulli_distribution negative(0.5);
  std::vector<Letter> out;
  while (out.size() < length) {
    const Letter l = index(rng) * (negative(rng) ? -1 : 1);
    if (!out.empty() && out.back() == -l) continue;
    out.push_back(l);
  }
  return ReducedWord::reduce(out, rank);
}

inline ReducedWord random_reduced_upto(std::mt19937_64& rng, int rank, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_reduced(rng, rank, len(rng));
}

/// Free reduction by repeatedly deleting the leftmost cancelling pair.
inline std::vector<Letter> naive_reduce(std::vector<Letter> letters) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == -letters[i + 1]) {
        letters.erase(letters.begin() + static_cast<long>(i), letters.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

inline bool connected_without(const std::vector<std::pair<int, int>>& edges, int vertex_count, int removed) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (auto [a, b] : edges) {
    if (a == removed || b == removed) continue;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  int start = removed == 0 ? 1 : 0;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        queue.push_back(u);
      }
    }
  }
  return reached == vertex_count - (removed >= 0 ? 1 : 0);
}

/// Cut-vertex predicate on all 2g vertices by deleting each vertex in turn.
/// Edges are built straight from the letters, not from whitehead_graph().
inline bool cut_vertex_by_removal(const ReducedWord& w) {
  const int g = w.rank();
  auto vertex = [g](Letter l) { return l > 0 ? l - 1 : g - l - 1; };
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) edges.emplace_back(vertex(w[i]), vertex(-w[i + 1]));
  if (edges.size() < 2) return true;
  if (!connected_without(edges, 2 * g, -1)) return true;
  for (int v = 0; v < 2 * g; ++v) {
    if (!connected_without(edges, 2 * g, v)) return true;
  }
  return false;
}

/// Cancelling pairs found by comparing ReducedWord objects.
inline std::vector<CancellingPair> naive_pairs(const ReducedWord& w) {
  std::vector<CancellingPair> out;
  const std::size_t n = w.size();
  for (std::size_t len = 1; 2 * len <= n; ++len) {
    for (std::size_t a = 0; a + 2 * len <= n; ++a) {
      const ReducedWord first = w.subword(a, a + len);
      for (std::size_t b = a + len; b + len <= n; ++b) {
        if (w.subword(b, b + len) == inverse(first)) out.push_back({{a, a + len}, {b, b + len}});
      }
    }
  }
  return out;
}

/// Interval-based statement of the nested-family conditions.
inline bool naive_family_ok(const std::vector<CancellingPair>& family) {
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (const auto& p : family) {
    intervals.emplace_back(p.first.begin, p.first.end);
    intervals.emplace_back(p.second.begin, p.second.end);
  }
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first < intervals[i - 1].second) return false;
  }
  for (const auto& p : family) {
    for (const auto& q : family) {
      if (&p == &q) continue;
      const auto inside = [&](const SubwordRange& r) { return p.first.end <= r.begin && r.end <= p.second.begin; };
      if (inside(q.first) != inside(q.second)) return false;
    }
  }
  return true;
}

/// Number of nested families with at most max_pairs pairs, by subset enumeration.
inline std::size_t naive_family_count(const ReducedWord& w, std::size_t max_pairs) {
  const auto pairs = naive_pairs(w);
  std::size_t count = 0;
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_pairs) continue;
    std::vector<CancellingPair> family;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) family.push_back(pairs[i]);
    }
    if (naive_family_ok(family)) ++count;
  }
  return count;
}

}  // namespace spotted::testing
