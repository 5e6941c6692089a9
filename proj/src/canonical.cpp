#include "vlink/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace vlink {

namespace {

// Token stream encoding: each passage is (role, signbit, label) with labels
// handed out on first appearance; -1 closes a component.  The canonical
// stream of a piece is the lexicographic minimum over component orders and
// rotations.  A free loop encodes as the single token -2.
constexpr int kEnd = -1;
constexpr int kLoop = -2;

struct PieceState {
  std::vector<int> todo;        // component indices still to place
  std::map<int, int> label;     // crossing id -> canonical label
  int next_label = 0;
  std::vector<int> stream;
};

std::vector<int> segment_tokens(const Diagram& d, int comp, int rot,
                                std::map<int, int> label, int next_label) {
  const auto& passages = d.components[comp];
  int len = static_cast<int>(passages.size());
  std::vector<int> seg;
  seg.reserve(3 * len + 1);
  for (int i = 0; i < len; ++i) {
    const Passage& p = passages[(rot + i) % len];
    auto [it, fresh] = label.emplace(p.crossing, next_label);
    if (fresh) ++next_label;
    seg.push_back(p.role == Role::Over ? 0 : 1);
    seg.push_back(d.signs.at(p.crossing) > 0 ? 0 : 1);
    seg.push_back(it->second);
  }
  seg.push_back(kEnd);
  return seg;
}

void search(const Diagram& d, PieceState st, std::vector<int>& best) {
  if (st.todo.empty()) {
    if (best.empty() || st.stream < best) best = st.stream;
    return;
  }
  // Best next segment over every remaining component and rotation; recurse
  // only into the ties.
  std::vector<int> min_seg;
  std::vector<std::pair<int, int>> winners;  // (todo index, rotation)
  for (int ti = 0; ti < static_cast<int>(st.todo.size()); ++ti) {
    int comp = st.todo[ti];
    int len = std::max<int>(1, static_cast<int>(d.components[comp].size()));
    for (int rot = 0; rot < len; ++rot) {
      auto seg = segment_tokens(d, comp, rot, st.label, st.next_label);
      if (min_seg.empty() || seg < min_seg) {
        min_seg = std::move(seg);
        winners.assign(1, {ti, rot});
      } else if (seg == min_seg) {
        winners.push_back({ti, rot});
      }
    }
  }
  for (auto [ti, rot] : winners) {
    PieceState next = st;
    int comp = next.todo[ti];
    next.todo.erase(next.todo.begin() + ti);
    const auto& passages = d.components[comp];
    int len = static_cast<int>(passages.size());
    for (int i = 0; i < len; ++i) {
      const Passage& p = passages[(rot + i) % len];
      auto [it, fresh] = next.label.emplace(p.crossing, next.next_label);
      if (fresh) ++next.next_label;
    }
    next.stream.insert(next.stream.end(), min_seg.begin(), min_seg.end());
    search(d, next, best);
  }
}

// Components sharing a crossing id belong to one piece; each free loop is
// its own piece.
std::vector<std::vector<int>> pieces_of(const Diagram& d) {
  int n = static_cast<int>(d.components.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> first_comp;  // crossing id -> first component seen
  for (int c = 0; c < n; ++c)
    for (const Passage& p : d.components[c]) {
      auto [it, fresh] = first_comp.emplace(p.crossing, c);
      if (!fresh) parent[find(c)] = find(it->second);
    }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [root, comps] : groups) out.push_back(std::move(comps));
  return out;
}

std::string render(const std::vector<int>& stream, int label_offset) {
  std::ostringstream out;
  bool at_start = true;
  for (std::size_t i = 0; i < stream.size();) {
    if (!at_start) out << " ";
    at_start = false;
    if (stream[i] == kLoop) {
      out << "()";
      ++i;
    } else if (stream[i] == kEnd) {
      out << "|";
      ++i;
    } else {
      out << (stream[i] == 0 ? "O" : "U") << stream[i + 2] + label_offset + 1
          << (stream[i + 1] == 0 ? "+" : "-");
      i += 3;
    }
  }
  return out.str();
}

}  // namespace

CanonicalKey canonical_key(const Diagram& d) {
  struct PieceResult {
    std::vector<int> stream;
    int labels = 0;
    std::string local;  // rendered with offset 0, used only for ordering
  };
  std::vector<PieceResult> results;
  for (const auto& comps : pieces_of(d)) {
    PieceResult r;
    if (comps.size() == 1 && d.components[comps[0]].empty()) {
      r.stream = {kLoop, kEnd};
    } else {
      PieceState st;
      st.todo = comps;
      search(d, std::move(st), r.stream);
      std::set<int> ids;
      for (int c : comps)
        for (const Passage& p : d.components[c]) ids.insert(p.crossing);
      r.labels = static_cast<int>(ids.size());
    }
    r.local = render(r.stream, 0);
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(),
            [](const PieceResult& a, const PieceResult& b) { return a.local < b.local; });

  std::string key;
  int offset = 0;
  for (const PieceResult& r : results) {
    if (!key.empty()) key += " ";
    key += render(r.stream, offset);
    offset += r.labels;
  }
  return {key};
}

}  // namespace vlink
