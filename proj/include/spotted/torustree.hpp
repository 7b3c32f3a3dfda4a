#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spotted {

/// Finite ball in the disk graph of a solid torus with two spots.
///
/// Nonseparating disks form a tree; each separating disk is a leaf hanging off
/// exactly one nonseparating disk. Labels are addresses from the root: "D" is
/// the root, "D.0.2" its third grandchild through child 0, and "S.0.2:1" the
/// second separating leaf at "D.0.2".
struct TorusDiskBall {
  struct Vertex {
    std::string label;
    bool separating = false;
  };

  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  int radius = 0;
  int valency_cap = 0;

  std::size_t degree(std::size_t v) const;
};

/// Breadth-first tree of nonseparating disks to `radius` with `tree_valency`
/// children per vertex, then `leaf_count` separating leaves on every
/// nonseparating vertex. Throws std::invalid_argument on negative radius or
/// leaf count, or tree_valency < 1.
TorusDiskBall build_ball(int radius, int tree_valency, int leaf_count);

struct TreeCheck {
  bool connected = false;
  bool acyclic = false;
  bool edge_count_ok = false;
  bool separating_leaves_ok = false;

  bool is_tree() const { return connected && acyclic && edge_count_ok; }
  bool ok() const { return is_tree() && separating_leaves_ok; }
};

/// Checks connectivity by BFS, acyclicity by DFS back-edge detection, the edge
/// count, and that separating vertices have degree exactly 1.
TreeCheck check_ball(const TorusDiskBall& ball);

/// Graphviz; separating leaves are drawn as boxes.
std::string to_dot(const TorusDiskBall& ball);

}  // namespace spotted
