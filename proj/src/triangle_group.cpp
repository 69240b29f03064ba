#include "conecat/triangle_group.hpp"

#include "conecat/error.hpp"

#include <cmath>
#include <numeric>
#include <queue>

namespace conecat {

namespace {

void check_spherical(std::array<int, 3> m) {
  for (int x : m) {
    if (x < 2) throw Error(ErrorCode::NotSpherical, "multiplicities must be at least 2");
  }
  // 1/p + 1/q + 1/r > 1  <=>  qr + pr + pq > pqr
  const long p = m[0], q = m[1], r = m[2];
  if (q * r + p * r + p * q <= p * q * r) throw Error(ErrorCode::NotSpherical, "1/p + 1/q + 1/r must exceed 1");
}

// Coset table for involutive generators; Hasse–Lehmer–Todd style definitions
// with coincidence processing.
class CosetTable {
 public:
  explicit CosetTable(std::size_t limit) : limit_(limit) { add(); }

  int add() {
    if (table_.size() >= limit_) throw Error(ErrorCode::InvalidInput, "coset enumeration exceeded its limit");
    table_.push_back({-1, -1, -1});
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int size() const { return static_cast<int>(table_.size()); }
  int& at(int c, int g) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)]; }

  void set(int a, int g, int b) {
    at(a, g) = b;
    at(b, g) = a;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)]) >= 0) b = at(b, w[static_cast<std::size_t>(j--)]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        return;
      }
      set(f, w[static_cast<std::size_t>(i)], add());
    }
  }

  int rep(int c) {
    while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(c)])];
    return c;
  }

 private:
  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (int g = 0; g < 3; ++g) {
        const int f = at(e, g);
        if (f < 0) continue;
        if (at(f, g) == e) at(f, g) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, g) >= 0) {
          merge(f1, at(e1, g), queue);
        } else if (at(f1, g) >= 0) {
          merge(e1, at(f1, g), queue);
        } else {
          set(e1, g, f1);
        }
      }
    }
  }

  std::size_t limit_;
  std::vector<std::array<int, 3>> table_;
  std::vector<int> parent_;
};

}  // namespace

int spherical_tile_count(std::array<int, 3> m) {
  check_spherical(m);
  const long p = m[0], q = m[1], r = m[2];
  // 4 pqr / (qr + pr + pq − pqr)
  return static_cast<int>(4 * p * q * r / (q * r + p * r + p * q - p * q * r));
}

ReflectionGroup enumerate_reflection_group(std::array<int, 3> m) {
  check_spherical(m);
  std::vector<std::vector<int>> relators;
  for (int k = 0; k < 3; ++k) relators.push_back({k, k});
  for (int i = 0; i < 3; ++i) {
    std::vector<int> w;
    for (int rep = 0; rep < m[static_cast<std::size_t>(i)]; ++rep) {
      w.push_back(i);
      w.push_back((i + 2) % 3);
    }
    relators.push_back(std::move(w));
  }

  CosetTable table(1 << 20);
  for (int c = 0; c < table.size(); ++c) {
    for (const auto& w : relators) {
      if (!table.live(c)) break;
      table.scan_and_fill(c, w);
    }
    for (int g = 0; g < 3 && table.live(c); ++g) {
      if (table.at(c, g) < 0) table.set(c, g, table.add());
    }
  }

  // compact the live cosets, keeping the identity first
  std::vector<int> index(static_cast<std::size_t>(table.size()), -1);
  int live = 0;
  for (int c = 0; c < table.size(); ++c) {
    if (table.live(c)) index[static_cast<std::size_t>(c)] = live++;
  }
  ReflectionGroup group;
  group.multiplicities = m;
  group.right_mul.resize(static_cast<std::size_t>(live));
  for (int c = 0; c < table.size(); ++c) {
    if (!table.live(c)) continue;
    for (int g = 0; g < 3; ++g) {
      group.right_mul[static_cast<std::size_t>(index[static_cast<std::size_t>(c)])][static_cast<std::size_t>(g)] =
          index[static_cast<std::size_t>(table.rep(table.at(c, g)))];
    }
  }

  group.odd.assign(static_cast<std::size_t>(live), false);
  std::vector<bool> seen(static_cast<std::size_t>(live), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    const int c = bfs.front();
    bfs.pop();
    for (int g = 0; g < 3; ++g) {
      const int d = group.right_mul[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
      if (seen[static_cast<std::size_t>(d)]) continue;
      seen[static_cast<std::size_t>(d)] = true;
      group.odd[static_cast<std::size_t>(d)] = !group.odd[static_cast<std::size_t>(c)];
      bfs.push(d);
    }
  }
  return group;
}

ConeSurface triangle_group_cover(const TriangleShape& t, std::array<int, 3> m) {
  const ReflectionGroup group = enumerate_reflection_group(m);
  if (group.order() != spherical_tile_count(m)) {
    throw Error(ErrorCode::InvalidInput, "coset enumeration disagrees with the tile-count formula");
  }
  // mirrored tiles list corners (0,2,1): their edge k is the original edge 2−k
  auto local = [&](int g, int k) { return group.odd[static_cast<std::size_t>(g)] ? 2 - k : k; };
  const auto& s = t.sides();
  SurfaceDescription d;
  d.kappa = t.kappa().value();
  for (int g = 0; g < group.order(); ++g) {
    if (group.odd[static_cast<std::size_t>(g)]) {
      d.triangles.push_back({s[2], s[1], s[0]});
    } else {
      d.triangles.push_back(s);
    }
  }
  for (int g = 0; g < group.order(); ++g) {
    for (int k = 0; k < 3; ++k) {
      const int h = group.right_mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)];
      if (group.odd[static_cast<std::size_t>(g)] == group.odd[static_cast<std::size_t>(h)]) {
        throw Error(ErrorCode::InvalidInput, "reflection did not flip orientation");
      }
      if (g < h) d.gluing.push_back({{g, local(g, k)}, {h, local(h, k)}});
    }
  }
  return ConeSurface::build(d);
}

}  // namespace conecat
