#include "vlink/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "vlink/covering.hpp"

namespace vlink {

long long writhe(const Diagram& d) {
  long long w = 0;
  for (const auto& [id, s] : d.signs) w += s;
  return w;
}

std::vector<std::vector<long long>> linking_matrix(const Diagram& d) {
  int n = static_cast<int>(d.components.size());
  std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
  auto refs = locate_crossings(d);
  for (const auto& [id, ref] : refs) {
    if (ref.over.component == ref.under.component) continue;
    lk[ref.over.component][ref.under.component] += d.signs.at(id);
  }
  return lk;
}

long long odd_writhe(const Diagram& d, int component) {
  const auto& comp = d.components.at(component);
  int len = static_cast<int>(comp.size());
  std::map<int, std::pair<int, int>> chords;  // id -> (over pos, under pos)
  for (int i = 0; i < len; ++i) {
    auto& slot = chords.try_emplace(comp[i].crossing, -1, -1).first->second;
    (comp[i].role == Role::Over ? slot.first : slot.second) = i;
  }
  std::erase_if(chords, [](const auto& e) {
    return e.second.first < 0 || e.second.second < 0;  // shared with another component
  });
  long long total = 0;
  for (const auto& [id, c] : chords) {
    // Which side of the chord a passage falls on does not matter: exactly one
    // endpoint inside is a symmetric condition.
    auto inside = [&](int pos) {
      return ((pos - c.first) % len + len) % len <
             ((c.second - c.first) % len + len) % len;
    };
    int interleaved = 0;
    for (const auto& [other, o] : chords) {
      if (other == id) continue;
      if (inside(o.first) != inside(o.second)) ++interleaved;
    }
    if (interleaved % 2 == 1) total += d.signs.at(id);
  }
  return total;
}

namespace {

// Finds the lexicographically least row-major flattening of lk over
// simultaneous row/column permutations.  Ties between interchangeable
// components (swapping them fixes the matrix) are pruned.
struct LinkCanon {
  const std::vector<std::vector<long long>>& lk;
  int n;
  std::vector<long long> best;
  bool have_best = false;

  explicit LinkCanon(const std::vector<std::vector<long long>>& m)
      : lk(m), n(static_cast<int>(m.size())) {}

  std::vector<long long> flatten(const std::vector<int>& perm) const {
    std::vector<long long> flat;
    flat.reserve(n * n);
    for (int i : perm)
      for (int j : perm) flat.push_back(lk[i][j]);
    return flat;
  }

  bool interchangeable(int x, int y) const {
    if (lk[x][x] != lk[y][y] || lk[x][y] != lk[y][x]) return false;
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (lk[x][z] != lk[y][z] || lk[z][x] != lk[z][y]) return false;
    }
    return true;
  }

  void run(std::vector<int>& perm, std::vector<char>& used) {
    if (static_cast<int>(perm.size()) == n) {
      auto flat = flatten(perm);
      if (!have_best || flat < best) {
        best = std::move(flat);
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool duplicate = false;
      for (int y : tried)
        if (interchangeable(x, y)) duplicate = true;
      if (duplicate) continue;
      tried.push_back(x);
      perm.push_back(x);
      used[x] = 1;
      run(perm, used);
      perm.pop_back();
      used[x] = 0;
    }
  }
};

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "n=" << component_count << ";lk=[";
  for (int i = 0; i < component_count; ++i) {
    out << (i ? "," : "") << "[";
    for (int j = 0; j < component_count; ++j)
      out << (j ? "," : "") << linking_canonical[i][j];
    out << "]";
  }
  out << "];ow=[";
  for (std::size_t i = 0; i < odd_writhe_multiset.size(); ++i)
    out << (i ? "," : "") << odd_writhe_multiset[i];
  out << "]";
  return out.str();
}

Fingerprint fingerprint(const Diagram& d) {
  Fingerprint fp;
  fp.component_count = static_cast<int>(d.components.size());
  auto lk = linking_matrix(d);

  LinkCanon canon(lk);
  std::vector<int> perm;
  std::vector<char> used(fp.component_count, 0);
  canon.run(perm, used);
  fp.linking_canonical.assign(fp.component_count,
                              std::vector<long long>(fp.component_count, 0));
  for (int i = 0; i < fp.component_count; ++i)
    for (int j = 0; j < fp.component_count; ++j)
      fp.linking_canonical[i][j] = canon.best[i * fp.component_count + j];

  for (int c = 0; c < fp.component_count; ++c)
    fp.odd_writhe_multiset.push_back(odd_writhe(d, c));
  std::sort(fp.odd_writhe_multiset.begin(), fp.odd_writhe_multiset.end());
  return fp;
}

Verdict obstruct(const Diagram& d, const CutSystem& p, int m) {
  SheetedDiagram lifted = cover(d, p, m);
  std::vector<Diagram> copies(m, d);
  Diagram unions = disjoint_union(copies);
  Verdict v;
  v.cover_fp = fingerprint(lifted.diagram);
  v.union_fp = fingerprint(unions);
  v.obstructed = !(v.cover_fp == v.union_fp);
  return v;
}

nlohmann::json invariants_json(const Diagram& d) {
  nlohmann::json j;
  j["components"] = d.components.size();
  j["writhe"] = writhe(d);
  j["linking"] = linking_matrix(d);
  nlohmann::json ow = nlohmann::json::array();
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    ow.push_back(odd_writhe(d, c));
  j["odd_writhe"] = ow;
  j["fingerprint"] = fingerprint(d).to_string();
  return j;
}

}  // namespace vlink
