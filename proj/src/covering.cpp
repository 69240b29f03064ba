#include "conecat/covering.hpp"

#include "conecat/error.hpp"
#include "conecat/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace conecat {

namespace {

struct GridNode {
  int tri;
  std::array<int, 3> w;  // integer barycentric weights summing to n
};

}  // namespace

CoveringResult covering_radius(const ConeSurface& s, int n) {
  if (s.kappa().value() != 4.0) throw Error(ErrorCode::NotApplicable, "covering check is stated for kappa = 4");
  const auto cones = s.cone_points();
  if (cones.size() < 3) throw Error(ErrorCode::NotApplicable, "fewer than three cone points");
  for (int v : cones) {
    if (s.vertex(v).cone_angle >= kTwoPi) throw Error(ErrorCode::NotApplicable, "a cone angle is at least 2pi");
  }
  if (n < 1 || n > 200) throw Error(ErrorCode::InvalidInput, "subdivisions must be in [1, 200]");

  // Global node ids: vertices first, then edge-interior nodes shared across
  // the gluing, then triangle-interior nodes.
  std::vector<GridNode> rep;
  std::map<std::tuple<int, int, int>, int> edge_node;  // (undirected key tri, edge, step)
  auto new_node = [&](int tri, std::array<int, 3> w) {
    rep.push_back({tri, w});
    return static_cast<int>(rep.size()) - 1;
  };
  std::vector<int> vertex_node(static_cast<std::size_t>(s.vertex_count()), -1);

  std::vector<std::vector<int>> tri_nodes(static_cast<std::size_t>(s.triangle_count()));
  for (int t = 0; t < s.triangle_count(); ++t) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        const std::array<int, 3> w{i, j, n - i - j};
        const int zeros = (w[0] == 0) + (w[1] == 0) + (w[2] == 0);
        int id;
        if (zeros == 2) {
          const int c = w[0] == n ? 0 : (w[1] == n ? 1 : 2);
          auto& slot = vertex_node[static_cast<std::size_t>(s.vertex_of(t, c))];
          if (slot < 0) slot = new_node(t, w);
          id = slot;
        } else if (zeros == 1) {
          // edge e runs from corner e to corner e+1; the missing weight is e+2
          const int e = w[2] == 0 ? 0 : (w[0] == 0 ? 1 : 2);
          const int step = w[static_cast<std::size_t>((e + 1) % 3)];  // distance from corner e in grid steps
          HalfEdge h{t, e};
          HalfEdge p = s.partner(h);
          int key_step = step;
          if (p < h) {
            std::swap(h, p);
            key_step = n - step;
          }
          auto it = edge_node.find({h.tri, h.edge, key_step});
          if (it == edge_node.end()) it = edge_node.emplace(std::make_tuple(h.tri, h.edge, key_step), new_node(t, w)).first;
          id = it->second;
        } else {
          id = new_node(t, w);
        }
        tri_nodes[static_cast<std::size_t>(t)].push_back(id);
      }
    }
  }

  auto position = [&](int t, const std::array<int, 3>& w) {
    return point_in_triangle(s, t, {double(w[0]), double(w[1]), double(w[2])});
  };

  const std::size_t nodes = rep.size();
  std::vector<double> dist(nodes, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (int v : cones) {
    const int id = vertex_node[static_cast<std::size_t>(v)];
    dist[static_cast<std::size_t>(id)] = 0.0;
    queue.push({0.0, id});
  }

  // node -> (triangle, local index) memberships for relaxation
  std::vector<std::vector<std::pair<int, int>>> member(nodes);
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& list = tri_nodes[static_cast<std::size_t>(t)];
    for (int k = 0; k < static_cast<int>(list.size()); ++k) member[static_cast<std::size_t>(list[static_cast<std::size_t>(k)])].push_back({t, k});
  }
  std::vector<std::vector<Vec3>> local_pos(static_cast<std::size_t>(s.triangle_count()));
  for (int t = 0; t < s.triangle_count(); ++t) {
    int k = 0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j, ++k) local_pos[static_cast<std::size_t>(t)].push_back(position(t, {i, j, n - i - j}));
    }
  }

  while (!queue.empty()) {
    const auto [d, id] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(id)]) continue;
    for (const auto& [t, k] : member[static_cast<std::size_t>(id)]) {
      const auto& list = tri_nodes[static_cast<std::size_t>(t)];
      const auto& pos = local_pos[static_cast<std::size_t>(t)];
      for (std::size_t m = 0; m < list.size(); ++m) {
        const double nd = d + model_distance(s.kappa(), pos[static_cast<std::size_t>(k)], pos[m]);
        if (nd < dist[static_cast<std::size_t>(list[m])] - 1e-15) {
          dist[static_cast<std::size_t>(list[m])] = nd;
          queue.push({nd, list[m]});
        }
      }
    }
  }

  CoveringResult r;
  r.nodes = static_cast<int>(nodes);
  for (std::size_t id = 0; id < nodes; ++id) {
    if (dist[id] > r.max_distance) {
      r.max_distance = dist[id];
      r.worst_triangle = rep[id].tri;
      for (int c = 0; c < 3; ++c) r.worst_weights[static_cast<std::size_t>(c)] = double(rep[id].w[static_cast<std::size_t>(c)]) / n;
    }
  }
  double longest = 0.0;
  for (int t = 0; t < s.triangle_count(); ++t) {
    for (double side : s.triangle(t).sides()) longest = std::max(longest, side);
  }
  r.error_bound = longest / n;
  r.below_pi_over_4 = r.max_distance + r.error_bound < kPi / 4.0;
  return r;
}

}  // namespace conecat
