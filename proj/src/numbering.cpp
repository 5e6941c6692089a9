#include "vlink/numbering.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace vlink {

std::string to_string(const ArcId& a) {
  return "c" + std::to_string(a.arc.component) + ":g" +
         std::to_string(a.arc.gap) + ":s" + std::to_string(a.segment);
}

namespace {

int segments_in(const Diagram& d, SemiArcId arc, int mark_count) {
  if (d.components[arc.component].empty())
    return std::max(mark_count, 1);  // free loop: marks cut it into that many pieces
  return mark_count + 1;
}

long long mod_reduce(long long x, long long m) {
  if (m == 0) return x;
  long long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::vector<ArcId> arcs_of(const Diagram& d, const CutSystem& p) {
  check_located(d, p);
  auto marks = marks_by_arc(p);
  std::vector<ArcId> out;
  for (SemiArcId arc : semi_arcs(d)) {
    auto it = marks.find(arc);
    int k = it == marks.end() ? 0 : static_cast<int>(it->second.size());
    for (int s = 0; s < segments_in(d, arc, k); ++s) out.push_back({arc, s});
  }
  return out;
}

ConstraintGraph build_constraints(const Diagram& d, const CutSystem& p) {
  if (auto bad = validate(d); !bad.empty()) throw Error(to_string(bad.front()));
  ConstraintGraph g;
  g.nodes = arcs_of(d, p);
  auto marks = marks_by_arc(p);

  auto seg_count = [&](SemiArcId arc) {
    auto it = marks.find(arc);
    return segments_in(d, arc, it == marks.end() ? 0 : static_cast<int>(it->second.size()));
  };
  auto first_seg = [&](SemiArcId arc) { return ArcId{arc, 0}; };
  auto last_seg = [&](SemiArcId arc) { return ArcId{arc, seg_count(arc) - 1}; };

  // Crossing the mark at ordinal j steps from segment j to segment j+1
  // (wrapping on free loops) and raises the value by eps.
  int mark_index = 0;
  for (const auto& [arc, epses] : marks) {
    int k = static_cast<int>(epses.size());
    bool loop = d.components[arc.component].empty();
    for (int j = 0; j < k; ++j) {
      int next = loop ? (j + 1) % k : j + 1;
      g.edges.push_back({{arc, j}, {arc, next}, epses[j],
                         DiffEdge::Source::CutMark, mark_index});
      ++mark_index;
    }
  }

  auto refs = locate_crossings(d);
  for (const auto& [id, ref] : refs) {
    int sign = d.signs.at(id);
    ArcId over_in = last_seg(incoming_gap(d, ref.over));
    ArcId over_out = first_seg(outgoing_gap(ref.over));
    ArcId under_in = last_seg(incoming_gap(d, ref.under));
    ArcId under_out = first_seg(outgoing_gap(ref.under));
    g.edges.push_back({over_in, over_out, -sign, DiffEdge::Source::Crossing, id});
    g.edges.push_back({under_in, under_out, sign, DiffEdge::Source::Crossing, id});
    g.edges.push_back({over_in, under_in, -sign, DiffEdge::Source::Crossing, id});
  }
  return g;
}

namespace {

struct Indexed {
  std::map<ArcId, int> index;
  // (edge index, +1 forward / -1 backward) per node
  std::vector<std::vector<std::pair<int, int>>> adjacent;

  explicit Indexed(const ConstraintGraph& g) {
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
      index.emplace(g.nodes[i], i);
    adjacent.resize(g.nodes.size());
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      int u = index.at(g.edges[e].from);
      int v = index.at(g.edges[e].to);
      adjacent[u].push_back({e, +1});
      if (v != u) adjacent[v].push_back({e, -1});
    }
  }
};

struct Forest {
  std::vector<long long> value;
  std::vector<char> seen;
  std::vector<int> parent_edge;  // edge index into the tree, -1 at roots
  std::vector<int> parent_dir;
  std::vector<int> parent_node;
  std::vector<int> order;  // visit order

  Forest(const ConstraintGraph& g, const Indexed& ix, long long modulus)
      : value(g.nodes.size(), 0),
        seen(g.nodes.size(), 0),
        parent_edge(g.nodes.size(), -1),
        parent_dir(g.nodes.size(), 0),
        parent_node(g.nodes.size(), -1) {
    for (int root = 0; root < static_cast<int>(g.nodes.size()); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::queue<int> bfs;
      bfs.push(root);
      while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        order.push_back(u);
        for (auto [e, dir] : ix.adjacent[u]) {
          int v = dir > 0 ? ix.index.at(g.edges[e].to) : ix.index.at(g.edges[e].from);
          if (seen[v]) continue;
          seen[v] = 1;
          value[v] = mod_reduce(value[u] + dir * g.edges[e].offset, modulus);
          parent_edge[v] = e;
          parent_dir[v] = dir;
          parent_node[v] = u;
          bfs.push(v);
        }
      }
    }
  }
};

// Tree path from node a up to node b's subtree meeting point, as witness
// steps; both chains are climbed to the common ancestor.
std::vector<WitnessStep> tree_path(const ConstraintGraph& g, const Forest& f,
                                   int from, int to) {
  std::vector<int> a_chain, b_chain;
  for (int x = from; x != -1; x = f.parent_node[x]) a_chain.push_back(x);
  for (int x = to; x != -1; x = f.parent_node[x]) b_chain.push_back(x);
  // Strip the common tail; afterwards both chains end at the meeting node.
  while (a_chain.size() > 1 && b_chain.size() > 1 &&
         a_chain[a_chain.size() - 2] == b_chain[b_chain.size() - 2]) {
    a_chain.pop_back();
    b_chain.pop_back();
  }
  std::vector<WitnessStep> steps;
  // Climb from `from` to the meeting node: traversing a parent edge goes
  // against the direction it was discovered in.
  for (std::size_t i = 0; i + 1 < a_chain.size(); ++i) {
    int child = a_chain[i];
    steps.push_back({g.edges[f.parent_edge[child]], -f.parent_dir[child]});
  }
  // Then descend to `to`: with the discovery direction, in reverse order.
  std::vector<WitnessStep> down;
  for (std::size_t i = 0; i + 1 < b_chain.size(); ++i) {
    int child = b_chain[i];
    down.push_back({g.edges[f.parent_edge[child]], f.parent_dir[child]});
  }
  steps.insert(steps.end(), down.rbegin(), down.rend());
  return steps;
}

}  // namespace

SolveResult solve(const ConstraintGraph& g, long long modulus) {
  if (modulus < 0) throw Error("modulus must be >= 0");
  Indexed ix(g);
  Forest forest(g, ix, modulus);

  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const DiffEdge& edge = g.edges[e];
    int u = ix.index.at(edge.from);
    int v = ix.index.at(edge.to);
    if (mod_reduce(forest.value[v] - forest.value[u] - edge.offset, modulus) == 0)
      continue;

    // The cycle: climb from v back to u through the forest, then close with
    // this edge; its offset sum cannot vanish mod m.
    WitnessCycle w;
    w.steps = tree_path(g, forest, v, u);
    w.steps.push_back({edge, +1});
    for (const WitnessStep& s : w.steps) w.residual += s.direction * s.edge.offset;
    return w;
  }

  Numbering f;
  f.modulus = modulus;
  for (const auto& [node, i] : ix.index) f.values[node] = forest.value[i];
  return f;
}

bool satisfies(const ConstraintGraph& g, const Numbering& f) {
  for (const ArcId& n : g.nodes)
    if (!f.values.count(n)) return false;
  for (const DiffEdge& e : g.edges) {
    long long diff = f.values.at(e.to) - f.values.at(e.from) - e.offset;
    if (mod_reduce(diff, f.modulus) != 0) return false;
  }
  return true;
}

long long defect_gcd(const ConstraintGraph& g) {
  Indexed ix(g);
  Forest forest(g, ix, 0);
  long long acc = 0;
  for (const DiffEdge& e : g.edges) {
    long long defect = forest.value[ix.index.at(e.to)] -
                       forest.value[ix.index.at(e.from)] - e.offset;
    acc = std::gcd(acc, defect);
  }
  return acc;
}

bool check_jump(const Diagram& d, const CutSystem& p, const Numbering& f) {
  if (f.modulus != 0) return false;
  ConstraintGraph g = build_constraints(d, p);
  if (!satisfies(g, f)) return false;
  auto marks = marks_by_arc(p);
  for (SemiArcId arc : semi_arcs(d)) {
    auto it = marks.find(arc);
    long long net = 0;
    int k = 0;
    if (it != marks.end()) {
      k = static_cast<int>(it->second.size());
      for (int eps : it->second) net += eps;
    }
    if (d.components[arc.component].empty()) {
      if (net != 0) return false;
    } else {
      long long jump = f.values.at({arc, k}) - f.values.at({arc, 0});
      if (jump != net) return false;
    }
  }
  return true;
}

bool is_cut_system(const Diagram& d, const CutSystem& p) {
  return std::holds_alternative<Numbering>(solve(build_constraints(d, p), 0));
}

}  // namespace vlink
