#include "vlink/cuts.hpp"

#include <algorithm>

namespace vlink {

void normalize(CutSystem& p) {
  std::sort(p.marks.begin(), p.marks.end());
}

std::map<SemiArcId, std::vector<int>> marks_by_arc(const CutSystem& p) {
  std::map<SemiArcId, std::vector<int>> out;
  CutSystem sorted = p;
  normalize(sorted);
  for (const CutPoint& m : sorted.marks) out[m.arc].push_back(m.eps);
  return out;
}

void check_located(const Diagram& d, const CutSystem& p) {
  std::map<SemiArcId, std::vector<int>> ordinals;
  for (const CutPoint& m : p.marks) {
    int nc = static_cast<int>(d.components.size());
    if (m.arc.component < 0 || m.arc.component >= nc)
      throw Error("cut mark on missing component " + std::to_string(m.arc.component));
    int gaps = std::max<int>(1, static_cast<int>(d.components[m.arc.component].size()));
    if (m.arc.gap < 0 || m.arc.gap >= gaps)
      throw Error("cut mark on missing gap " + std::to_string(m.arc.gap) +
                  " of component " + std::to_string(m.arc.component));
    if (m.eps != 1 && m.eps != -1) throw Error("cut mark eps must be +1 or -1");
    ordinals[m.arc].push_back(m.ordinal);
  }
  for (auto& [arc, ords] : ordinals) {
    std::sort(ords.begin(), ords.end());
    for (int i = 0; i < static_cast<int>(ords.size()); ++i)
      if (ords[i] != i)
        throw Error("cut mark ordinals not dense on component " +
                    std::to_string(arc.component) + " gap " +
                    std::to_string(arc.gap));
  }
}

CutSystem canonical_cut_system(const Diagram& d) {
  auto refs = locate_crossings(d);
  // Per-arc mark lists; a "start" mark goes at ordinal 0 of its arc, an
  // "end" mark after everything else.  Each arc ends at one passage and
  // starts at one, so at most one of each lands per arc.
  std::map<SemiArcId, std::pair<int, int>> placed;  // arc -> (start eps, end eps); 0 = none
  for (const auto& [id, ref] : refs) {
    bool positive = d.signs.at(id) > 0;
    // Coherent mark at the tail of the incoming overpass (incoming underpass
    // for negative crossings), incoherent mark at the head of the outgoing
    // underpass (overpass when negative).
    SemiArcId coh_arc = incoming_gap(d, positive ? ref.over : ref.under);
    SemiArcId inc_arc = outgoing_gap(positive ? ref.under : ref.over);
    placed[coh_arc].second = +1;
    placed[inc_arc].first = -1;
  }
  CutSystem p;
  for (const auto& [arc, se] : placed) {
    int ordinal = 0;
    if (se.first != 0) p.marks.push_back({arc, ordinal++, se.first});
    if (se.second != 0) p.marks.push_back({arc, ordinal++, se.second});
  }
  normalize(p);
  return p;
}

Balance balance(const CutSystem& p) {
  Balance b;
  for (const CutPoint& m : p.marks) ++(m.eps > 0 ? b.coherent : b.incoherent);
  return b;
}

namespace {

bool is_loop(const Diagram& d, SemiArcId arc) {
  return d.components[arc.component].empty();
}

// Mutable per-arc view used by the move engine.
struct ArcMarks {
  std::map<SemiArcId, std::vector<int>> eps;

  explicit ArcMarks(const CutSystem& p) : eps(marks_by_arc(p)) {}

  std::vector<int>& at(SemiArcId arc) { return eps[arc]; }

  void insert(SemiArcId arc, int pos, int e) {
    auto& v = eps[arc];
    v.insert(v.begin() + pos, e);
  }

  void erase(SemiArcId arc, int pos) {
    auto& v = eps[arc];
    v.erase(v.begin() + pos);
  }

  CutSystem to_system() const {
    CutSystem p;
    for (const auto& [arc, v] : eps)
      for (int i = 0; i < static_cast<int>(v.size()); ++i)
        p.marks.push_back({arc, i, v[i]});
    normalize(p);
    return p;
  }
};

struct CrossingSite {
  // The four arcs around a crossing, named from the traversal's viewpoint.
  SemiArcId over_in, over_out, under_in, under_out;
  bool positive = false;
};

CrossingSite site_of(const Diagram& d, const std::map<int, CrossingRefs>& refs, int id) {
  const CrossingRefs& r = refs.at(id);
  return {incoming_gap(d, r.over), outgoing_gap(r.over),
          incoming_gap(d, r.under), outgoing_gap(r.under),
          d.signs.at(id) > 0};
}

// The pair a PushAtCrossing consumes: canonical placement (as produced by
// canonical_cut_system) around the crossing.
struct PairSpec {
  SemiArcId tail_arc;  // mark at this arc's last ordinal
  SemiArcId head_arc;  // mark at this arc's ordinal 0
};

PairSpec near_pair(const CrossingSite& s) {
  return s.positive ? PairSpec{s.over_in, s.under_out}
                    : PairSpec{s.under_in, s.over_out};
}

PairSpec far_pair(const CrossingSite& s) {
  // Mirrored placement on the other two arcs, with orientations flipped:
  // incoherent at a tail, coherent at a head.
  return s.positive ? PairSpec{s.under_in, s.over_out}
                    : PairSpec{s.over_in, s.under_out};
}

bool pair_present(ArcMarks& marks, const PairSpec& ps, bool near) {
  // near: coherent tail + incoherent head; far: incoherent tail + coherent head.
  int tail_eps = near ? +1 : -1;
  auto& tail = marks.at(ps.tail_arc);
  auto& head = marks.at(ps.head_arc);
  if (tail.empty() || head.empty()) return false;
  if (tail.back() != tail_eps) return false;
  // Same arc with one mark would double-count it.
  if (ps.tail_arc == ps.head_arc && head.size() < 2) return false;
  return head.front() == -tail_eps;
}

void remove_pair(ArcMarks& marks, const PairSpec& ps) {
  marks.erase(ps.tail_arc, static_cast<int>(marks.at(ps.tail_arc).size()) - 1);
  marks.erase(ps.head_arc, 0);
}

void add_pair(ArcMarks& marks, const PairSpec& ps, bool near) {
  int tail_eps = near ? +1 : -1;
  marks.insert(ps.head_arc, 0, -tail_eps);
  marks.insert(ps.tail_arc, static_cast<int>(marks.at(ps.tail_arc).size()), tail_eps);
}

int insert_slots(const Diagram& d, SemiArcId arc, int mark_count) {
  if (is_loop(d, arc)) return std::max(mark_count, 1);
  return mark_count + 1;
}

}  // namespace

std::vector<CutMove> enumerate_cut_moves(const Diagram& d, const CutSystem& p) {
  check_located(d, p);
  std::vector<CutMove> moves;
  ArcMarks marks(p);

  for (SemiArcId arc : semi_arcs(d)) {
    const std::vector<int>& eps = marks.at(arc);
    int k = static_cast<int>(eps.size());
    for (int pos = 0; pos < insert_slots(d, arc, k); ++pos)
      for (int lead : {+1, -1})
        moves.push_back({CutMove::Kind::InsertPair, arc, pos, lead, 0});
    bool loop = is_loop(d, arc);
    int adj = loop ? k : k - 1;  // pairs (pos, pos+1), wrapping on loops
    for (int pos = 0; pos < adj; ++pos) {
      int a = eps[pos], b = eps[(pos + 1) % k];
      if (loop && k == 1) continue;  // single mark pairs with itself
      if (a == -b) {
        moves.push_back({CutMove::Kind::DeletePair, arc, pos, a, 0});
        if (!(loop && pos == k - 1))  // wrap swap would renumber the origin
          moves.push_back({CutMove::Kind::SwapAdjacent, arc, pos, a, 0});
      }
    }
  }

  auto refs = locate_crossings(d);
  for (const auto& [id, ref] : refs) {
    CrossingSite s = site_of(d, refs, id);
    if (pair_present(marks, near_pair(s), true))
      moves.push_back({CutMove::Kind::PushAtCrossing, {}, 0, 0, id});
    if (pair_present(marks, far_pair(s), false))
      moves.push_back({CutMove::Kind::PullAtCrossing, {}, 0, 0, id});
  }
  return moves;
}

CutSystem apply_cut_move(const Diagram& d, const CutSystem& p, const CutMove& mv) {
  check_located(d, p);
  ArcMarks marks(p);

  auto arc_exists = [&](SemiArcId arc) {
    return arc.component >= 0 &&
           arc.component < static_cast<int>(d.components.size()) &&
           arc.gap >= 0 &&
           arc.gap < std::max<int>(1, static_cast<int>(d.components[arc.component].size()));
  };

  switch (mv.kind) {
    case CutMove::Kind::InsertPair: {
      if (!arc_exists(mv.arc)) throw Error("insert: no such semi-arc");
      auto& eps = marks.at(mv.arc);
      int k = static_cast<int>(eps.size());
      if (mv.lead_eps != 1 && mv.lead_eps != -1) throw Error("insert: bad eps");
      if (mv.position < 0 || mv.position >= insert_slots(d, mv.arc, k))
        throw Error("insert: bad position");
      marks.insert(mv.arc, mv.position, -mv.lead_eps);
      marks.insert(mv.arc, mv.position, mv.lead_eps);
      break;
    }
    case CutMove::Kind::DeletePair:
    case CutMove::Kind::SwapAdjacent: {
      if (!arc_exists(mv.arc)) throw Error("no such semi-arc");
      auto& eps = marks.at(mv.arc);
      int k = static_cast<int>(eps.size());
      bool loop = is_loop(d, mv.arc);
      int adj = loop ? k : k - 1;
      if (mv.position < 0 || mv.position >= adj || (loop && k == 1))
        throw Error("no adjacent pair at that position");
      int second = (mv.position + 1) % k;
      if (eps[mv.position] != -eps[second])
        throw Error("marks at that position do not cancel");
      if (mv.kind == CutMove::Kind::DeletePair) {
        marks.erase(mv.arc, std::max(mv.position, second));
        marks.erase(mv.arc, std::min(mv.position, second));
      } else {
        if (loop && mv.position == k - 1) throw Error("swap across the loop origin");
        std::swap(eps[mv.position], eps[second]);
      }
      break;
    }
    case CutMove::Kind::PushAtCrossing:
    case CutMove::Kind::PullAtCrossing: {
      auto refs = locate_crossings(d);
      if (!refs.count(mv.crossing)) throw Error("no such crossing");
      CrossingSite s = site_of(d, refs, mv.crossing);
      bool push = mv.kind == CutMove::Kind::PushAtCrossing;
      PairSpec take = push ? near_pair(s) : far_pair(s);
      PairSpec give = push ? far_pair(s) : near_pair(s);
      if (!pair_present(marks, take, push))
        throw Error("crossing does not carry the movable pair");
      remove_pair(marks, take);
      add_pair(marks, give, !push);
      break;
    }
  }
  return marks.to_system();
}

}  // namespace vlink
