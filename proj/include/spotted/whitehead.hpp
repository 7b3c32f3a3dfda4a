#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spotted/words.hpp"

namespace spotted {

/// Which vertices take part in the 2-connectivity test.
enum class CutVertexConvention {
  /// All 2g symbols; unused letters are isolated vertices, so the graph counts
  /// as disconnected.
  FullVertexSet,
  /// Only symbols incident to at least one edge.
  SupportOnly,
};

inline constexpr CutVertexConvention kDefaultCutVertexConvention = CutVertexConvention::FullVertexSet;

/// Whitehead graph of a word with respect to the standard basis.
///
/// Vertex v in [0, g) is x_{v+1}; vertex v in [g, 2g) is x_{v-g+1}^-1.
/// A consecutive pair a_i a_j contributes the edge {a_i, a_j^-1}.
struct WhiteheadGraph {
  int rank = 2;
  std::vector<std::pair<int, int>> edges;

  std::size_t vertex_count() const { return 2 * static_cast<std::size_t>(rank); }
  std::size_t edge_count() const { return edges.size(); }
  /// Number of edges between u and v (order-insensitive).
  std::size_t multiplicity(int u, int v) const;
};

int vertex_of(Letter l, int rank);
Letter letter_of_vertex(int vertex, int rank);
std::string vertex_label(int vertex, int rank);

WhiteheadGraph whitehead_graph(const ReducedWord& w);
WhiteheadGraph whitehead_graph(std::span<const Letter> letters, int rank);

/// True iff the graph fails to be 2-connected: fewer than two edges, disconnected,
/// or some vertex whose removal disconnects the rest.
bool has_cut_vertex(const WhiteheadGraph& graph, CutVertexConvention convention = kDefaultCutVertexConvention);

/// Graphviz rendering; one edge line per unit of multiplicity, sorted by vertex index.
std::string to_dot(const WhiteheadGraph& graph);

struct SimpleLengthWitness {
  int value = 0;
  /// Letterwise factors w_1..w_t of the word, each with a cut-vertex-free
  /// Whitehead graph. Empty when value == 0.
  std::vector<ReducedWord> pieces;
};

/// Simple g+1-length: the largest t such that w splits letterwise into t factors
/// whose Whitehead graphs have no cut vertex; 0 when no such split exists.
SimpleLengthWitness simple_length(const ReducedWord& w, CutVertexConvention convention = kDefaultCutVertexConvention);
int simple_length_value(const ReducedWord& w, CutVertexConvention convention = kDefaultCutVertexConvention);

inline constexpr std::size_t kDefaultBruteforceCap = 14;

/// Reference value by enumerating every letterwise decomposition.
/// Throws CapExceeded when the word is longer than `cap`.
int simple_length_bruteforce(const ReducedWord& w, std::size_t cap = kDefaultBruteforceCap,
                             CutVertexConvention convention = kDefaultCutVertexConvention);

}  // namespace spotted
