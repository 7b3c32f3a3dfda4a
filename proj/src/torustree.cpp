#include "spotted/torustree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace spotted {

std::size_t TorusDiskBall::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == v || e.second == v; }));
}

TorusDiskBall build_ball(int radius, int tree_valency, int leaf_count) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  if (tree_valency < 1) throw std::invalid_argument("tree valency must be at least 1");
  if (leaf_count < 0) throw std::invalid_argument("leaf count must be nonnegative");

  TorusDiskBall ball;
  ball.radius = radius;
  ball.valency_cap = tree_valency;
  ball.vertices.push_back({"D", false});

  std::vector<int> depth{0};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop_front();
    if (depth[v] == radius) continue;
    for (int c = 0; c < tree_valency; ++c) {
      const std::size_t child = ball.vertices.size();
      ball.vertices.push_back({ball.vertices[v].label + "." + std::to_string(c), false});
      depth.push_back(depth[v] + 1);
      ball.edges.emplace_back(v, child);
      frontier.push_back(child);
    }
  }

  const std::size_t nonseparating = ball.vertices.size();
  for (std::size_t v = 0; v < nonseparating; ++v) {
    const std::string address = ball.vertices[v].label.substr(1);
    for (int s = 0; s < leaf_count; ++s) {
      const std::size_t leaf = ball.vertices.size();
      ball.vertices.push_back({"S" + address + ":" + std::to_string(s), true});
      ball.edges.emplace_back(v, leaf);
    }
  }
  return ball;
}

TreeCheck check_ball(const TorusDiskBall& ball) {
  const std::size_t n = ball.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : ball.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  TreeCheck check;
  check.edge_count_ok = n > 0 && ball.edges.size() == n - 1;

  std::vector<char> seen(n, 0);
  std::size_t reached = 0;
  if (n > 0) {
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      ++reached;
      for (std::size_t u : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  check.connected = n > 0 && reached == n;

  // Undirected DFS; an edge to a visited vertex other than through the tree
  // edge we arrived by is a cycle. Parallel edges count as cycles.
  check.acyclic = true;
  std::vector<char> visited(n, 0);
  for (std::size_t root = 0; root < n && check.acyclic; ++root) {
    if (visited[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, n}};
    while (!stack.empty() && check.acyclic) {
      const auto [v, parent] = stack.back();
      stack.pop_back();
      if (visited[v]) {
        check.acyclic = false;
        break;
      }
      visited[v] = 1;
      bool skipped_parent = false;
      for (std::size_t u : adj[v]) {
        if (u == parent && !skipped_parent) {
          skipped_parent = true;
          continue;
        }
        stack.emplace_back(u, v);
      }
    }
  }

  check.separating_leaves_ok = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (ball.vertices[v].separating && adj[v].size() != 1) check.separating_leaves_ok = false;
  }
  return check;
}

std::string to_dot(const TorusDiskBall& ball) {
  std::ostringstream out;
  out << "graph torus_disks {\n";
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << ball.vertices[v].label << "\", shape="
        << (ball.vertices[v].separating ? "box" : "ellipse") << "];\n";
  }
  for (const auto& [a, b] : ball.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace spotted
