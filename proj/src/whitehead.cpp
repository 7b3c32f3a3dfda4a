#include "spotted/whitehead.hpp"

#include <algorithm>
#include <sstream>

namespace spotted {

std::size_t WhiteheadGraph::multiplicity(int u, int v) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  }));
}

int vertex_of(Letter l, int rank) { return l > 0 ? l - 1 : rank + (-l) - 1; }

Letter letter_of_vertex(int vertex, int rank) { return vertex < rank ? vertex + 1 : -(vertex - rank + 1); }

std::string vertex_label(int vertex, int rank) {
  const Letter l = letter_of_vertex(vertex, rank);
  return (l > 0 ? "x" : "X") + std::to_string(l > 0 ? l : -l);
}

WhiteheadGraph whitehead_graph(std::span<const Letter> letters, int rank) {
  WhiteheadGraph g;
  g.rank = rank;
  if (letters.size() > 1) g.edges.reserve(letters.size() - 1);
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    g.edges.emplace_back(vertex_of(letters[i], rank), vertex_of(-letters[i + 1], rank));
  }
  return g;
}

WhiteheadGraph whitehead_graph(const ReducedWord& w) { return whitehead_graph(w.letters(), w.rank()); }

namespace {

// Iterative articulation-point search over the vertices flagged in `active`.
// Returns true when the active subgraph is disconnected or has a cut vertex.
bool fails_biconnectivity(const std::vector<std::vector<int>>& adj, const std::vector<char>& active) {
  const int n = static_cast<int>(adj.size());
  int root = -1;
  int active_count = 0;
  for (int v = 0; v < n; ++v) {
    if (active[v]) {
      if (root < 0) root = v;
      ++active_count;
    }
  }
  if (active_count <= 1) return true;

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<int> stack{root};
  disc[root] = low[root] = timer++;

  while (!stack.empty()) {
    const int v = stack.back();
    if (next_edge[v] < adj[v].size()) {
      const int u = adj[v][next_edge[v]++];
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        if (v == root) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
      continue;
    }
    stack.pop_back();
    const int p = parent[v];
    if (p >= 0) {
      low[p] = std::min(low[p], low[v]);
      if (p != root && low[v] >= disc[p]) return true;
    }
  }

  if (timer < active_count) return true;
  return root_children > 1;
}

}  // namespace

bool has_cut_vertex(const WhiteheadGraph& graph, CutVertexConvention convention) {
  if (graph.edges.size() < 2) return true;
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<int>> adj(n);
  std::vector<char> active(n, convention == CutVertexConvention::FullVertexSet ? 1 : 0);
  for (const auto& [a, b] : graph.edges) {
    active[a] = active[b] = 1;
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return fails_biconnectivity(adj, active);
}

std::string to_dot(const WhiteheadGraph& graph) {
  auto edges = graph.edges;
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "graph whitehead {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << vertex_label(static_cast<int>(v), graph.rank) << ";\n";
  }
  for (const auto& [a, b] : edges) {
    out << "  " << vertex_label(a, graph.rank) << " -- " << vertex_label(b, graph.rank) << ";\n";
  }
  out << "}\n";
  return out.str();
}

SimpleLengthWitness simple_length(const ReducedWord& w, CutVertexConvention convention) {
  const std::size_t n = w.size();
  const auto letters = w.letters();

  // Adding letters only adds edges, and 2-connectivity is preserved under
  // adding edges, so for each start j the good ends form a suffix [first_good[j], n].
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_good(n, kNone);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 2; i <= n; ++i) {
      if (!has_cut_vertex(whitehead_graph(letters.subspan(j, i - j), w.rank()), convention)) {
        first_good[j] = i;
        break;
      }
    }
  }

  // best[i]: max pieces covering the prefix of length i, -1 if not coverable.
  std::vector<int> best(n + 1, -1);
  std::vector<std::size_t> from(n + 1, kNone);
  best[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (best[j] < 0 || first_good[j] == kNone || first_good[j] > i) continue;
      if (best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
        from[i] = j;
      }
    }
  }

  SimpleLengthWitness result;
  if (n == 0 || best[n] <= 0) return result;
  result.value = best[n];
  for (std::size_t i = n; i > 0; i = from[i]) {
    result.pieces.push_back(w.subword(from[i], i));
  }
  std::reverse(result.pieces.begin(), result.pieces.end());
  return result;
}

int simple_length_value(const ReducedWord& w, CutVertexConvention convention) {
  return simple_length(w, convention).value;
}

int simple_length_bruteforce(const ReducedWord& w, std::size_t cap, CutVertexConvention convention) {
  const std::size_t n = w.size();
  if (n > cap) {
    throw CapExceeded("word length " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(cap));
  }
  if (n == 0) return 0;

  // piece_ok[j][i]: whether w[j..i) alone is cut-vertex free.
  std::vector<std::vector<char>> piece_ok(n, std::vector<char>(n + 1, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i <= n; ++i) {
      piece_ok[j][i] = !has_cut_vertex(whitehead_graph(w.letters().subspan(j, i - j), w.rank()), convention);
    }
  }

  int best = 0;
  // Bit b of mask set means a cut between letters b and b+1.
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    int pieces = 0;
    std::size_t start = 0;
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) {
      const bool cut = b + 1 == n || ((mask >> b) & 1U);
      if (!cut) continue;
      ok = piece_ok[start][b + 1];
      ++pieces;
      start = b + 1;
    }
    if (ok) best = std::max(best, pieces);
  }
  return best;
}

}  // namespace spotted
