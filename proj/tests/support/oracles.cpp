#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace vlink::testing {

namespace {

bool try_component_map(const Diagram& a, const Diagram& b,
                       std::vector<int>& b_used, std::map<int, int>& relabel,
                       std::map<int, int>& relabel_rev, std::size_t next_a) {
  if (next_a == a.components.size()) return true;
  const auto& ca = a.components[next_a];
  int len = static_cast<int>(ca.size());
  for (int cb = 0; cb < static_cast<int>(b.components.size()); ++cb) {
    if (b_used[cb]) continue;
    const auto& comp_b = b.components[cb];
    if (static_cast<int>(comp_b.size()) != len) continue;
    int rotations = std::max(len, 1);
    for (int rot = 0; rot < rotations; ++rot) {
      std::map<int, int> saved = relabel, saved_rev = relabel_rev;
      bool ok = true;
      for (int i = 0; i < len && ok; ++i) {
        const Passage& pa = ca[i];
        const Passage& pb = comp_b[(i + rot) % len];
        if (pa.role != pb.role) ok = false;
        if (ok && a.signs.at(pa.crossing) != b.signs.at(pb.crossing)) ok = false;
        if (ok) {
          auto [it, fresh] = relabel.emplace(pa.crossing, pb.crossing);
          if (!fresh && it->second != pb.crossing) ok = false;
          auto [rit, rfresh] = relabel_rev.emplace(pb.crossing, pa.crossing);
          if (!rfresh && rit->second != pa.crossing) ok = false;
        }
      }
      if (ok) {
        b_used[cb] = 1;
        if (try_component_map(a, b, b_used, relabel, relabel_rev, next_a + 1))
          return true;
        b_used[cb] = 0;
      }
      relabel = std::move(saved);
      relabel_rev = std::move(saved_rev);
    }
  }
  return false;
}

}  // namespace

bool brute_isomorphic(const Diagram& a, const Diagram& b) {
  if (a.components.size() != b.components.size()) return false;
  if (a.signs.size() != b.signs.size()) return false;
  std::vector<int> b_used(b.components.size(), 0);
  std::map<int, int> relabel, relabel_rev;
  return try_component_map(a, b, b_used, relabel, relabel_rev, 0);
}

namespace {

long long reduce(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

struct OracleSearch {
  const ConstraintGraph& g;
  long long m;
  std::map<ArcId, int> index;
  // edges whose endpoints are both assigned once node i is; checked then
  std::vector<std::vector<int>> due;
  std::vector<long long> value;

  OracleSearch(const ConstraintGraph& graph, long long modulus)
      : g(graph), m(modulus) {
    for (const ArcId& n : g.nodes)
      index.emplace(n, static_cast<int>(index.size()));
    due.resize(g.nodes.size());
    value.resize(g.nodes.size(), -1);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      int u = index.at(g.edges[e].from);
      int v = index.at(g.edges[e].to);
      due[std::max(u, v)].push_back(e);
    }
  }

  bool consistent(int node) {
    for (int e : due[node]) {
      const DiffEdge& edge = g.edges[e];
      long long diff =
          value[index.at(edge.to)] - value[index.at(edge.from)] - edge.offset;
      if (reduce(diff, m) != 0) return false;
    }
    return true;
  }

  bool assign(int node) {
    if (node == static_cast<int>(g.nodes.size())) return true;
    for (long long v = 0; v < m; ++v) {
      value[node] = v;
      if (consistent(node) && assign(node + 1)) return true;
    }
    value[node] = -1;
    return false;
  }
};

}  // namespace

bool oracle_numberable(const ConstraintGraph& g, long long m) {
  OracleSearch search(g, m);
  return search.assign(0);
}

bool product_numberable(const ConstraintGraph& g, long long m) {
  int n = static_cast<int>(g.nodes.size());
  std::map<ArcId, int> index;
  for (const ArcId& node : g.nodes) index.emplace(node, static_cast<int>(index.size()));
  std::vector<long long> value(n, 0);
  while (true) {
    bool all_ok = true;
    for (const DiffEdge& e : g.edges) {
      long long diff = value[index.at(e.to)] - value[index.at(e.from)] - e.offset;
      if (reduce(diff, m) != 0) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) return true;
    int pos = 0;
    while (pos < n && value[pos] == m - 1) value[pos++] = 0;
    if (pos == n) return false;
    ++value[pos];
  }
}

namespace {

void walk_cycles(const ConstraintGraph& g,
                 const std::vector<std::vector<std::pair<int, int>>>& adjacent,
                 const std::map<ArcId, int>& index, int start, int current,
                 std::vector<char>& on_path, std::vector<char>& edge_used,
                 long long sum, long long& acc) {
  for (auto [e, dir] : adjacent[current]) {
    if (edge_used[e]) continue;
    const DiffEdge& edge = g.edges[e];
    int next = dir > 0 ? index.at(edge.to) : index.at(edge.from);
    long long next_sum = sum + dir * edge.offset;
    if (next == start) {
      acc = std::gcd(acc, next_sum);
      continue;
    }
    if (next < start || on_path[next]) continue;  // dedup: cycles keyed by min node
    on_path[next] = 1;
    edge_used[e] = 1;
    walk_cycles(g, adjacent, index, start, next, on_path, edge_used, next_sum, acc);
    edge_used[e] = 0;
    on_path[next] = 0;
  }
}

}  // namespace

long long cycle_gcd_bruteforce(const ConstraintGraph& g) {
  std::map<ArcId, int> index;
  for (const ArcId& n : g.nodes) index.emplace(n, static_cast<int>(index.size()));
  std::vector<std::vector<std::pair<int, int>>> adjacent(g.nodes.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int u = index.at(g.edges[e].from);
    int v = index.at(g.edges[e].to);
    adjacent[u].push_back({e, +1});
    if (u != v) adjacent[v].push_back({e, -1});
  }
  long long acc = 0;
  std::vector<char> on_path(g.nodes.size(), 0), edge_used(g.edges.size(), 0);
  for (int s = 0; s < static_cast<int>(g.nodes.size()); ++s) {
    on_path.assign(g.nodes.size(), 0);
    on_path[s] = 1;
    walk_cycles(g, adjacent, index, s, s, on_path, edge_used, 0, acc);
  }
  return acc < 0 ? -acc : acc;
}

Diagram cover_oracle(const Diagram& d, const CutSystem& p, int m) {
  auto marks = marks_by_arc(p);
  Diagram out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    if (len == 0) {
      // Valid systems balance every loop, so each sheet closes on itself.
      for (int s = 0; s < m; ++s) out.components.emplace_back();
      continue;
    }
    // State (pos, sheet) emits the passage at pos on that sheet; successor
    // advances one position and drops the sheet by the gap's eps sum.
    auto shift_of = [&](int pos) {
      int total = 0;
      if (auto it = marks.find(SemiArcId{c, pos}); it != marks.end())
        for (int eps : it->second) total += eps;
      return total;
    };
    std::vector<char> visited(static_cast<std::size_t>(len) * m, 0);
    auto state_id = [&](int pos, int sheet) { return pos * m + sheet; };
    for (int s0 = 0; s0 < m; ++s0) {
      if (visited[state_id(0, s0)]) continue;
      std::vector<Passage> lifted;
      int pos = 0, sheet = s0;
      while (!visited[state_id(pos, sheet)]) {
        visited[state_id(pos, sheet)] = 1;
        int id = (comp[pos].crossing - 1) * m + sheet + 1;
        lifted.push_back({id, comp[pos].role});
        out.signs[id] = d.signs.at(comp[pos].crossing);
        sheet = ((sheet - shift_of(pos)) % m + m) % m;
        pos = (pos + 1) % len;
      }
      out.components.push_back(std::move(lifted));
    }
  }
  return out;
}

}  // namespace vlink::testing
