#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/corpus.hpp"
#include "vlink/covering.hpp"
#include "vlink/invariants.hpp"
#include "vlink/io.hpp"
#include "vlink/rng.hpp"

using namespace vlink;

using Matrix = std::vector<std::vector<long long>>;

TEST_CASE("writhe sums the signs") {
  CHECK(writhe(virtual_trefoil()) == 2);
  CHECK(writhe(torus2q(3)) == 3);
  CHECK(writhe(parse_diagram("O1- U1- O2+ U2+\n").diagram) == 0);
  CHECK(writhe(Diagram{}) == 0);
}

TEST_CASE("linking matrix literals") {
  CHECK(linking_matrix(hopf_link()) == Matrix{{0, 1}, {1, 0}});
  // Both crossings put component 0 on top, so the matrix is asymmetric.
  Diagram sheared = parse_diagram("O1+ O2+\nU1+ U2+\n").diagram;
  CHECK(linking_matrix(sheared) == Matrix{{0, 2}, {0, 0}});
  // Self-crossings never contribute.
  CHECK(linking_matrix(virtual_trefoil()) == Matrix{{0}});
}

TEST_CASE("linking matrix of a disjoint union is block diagonal") {
  std::vector<Diagram> parts = {hopf_link(), hopf_link()};
  Diagram u = disjoint_union(parts);
  CHECK(linking_matrix(u) ==
        Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

TEST_CASE("odd writhe literals") {
  CHECK(odd_writhe(virtual_trefoil(), 0) == 2);
  CHECK(odd_writhe(parse_diagram("O1- O2- U1- U2-\n").diagram, 0) == -2);
  // Classical torus knots have no odd crossings.
  CHECK(odd_writhe(torus2q(3), 0) == 0);
  CHECK(odd_writhe(torus2q(5), 0) == 0);
  // Kinks are even: zero passages between the over and the under.
  CHECK(odd_writhe(parse_diagram("O1+ U1+\n").diagram, 0) == 0);
}

TEST_CASE("fingerprint ignores labels, rotations and component order") {
  Lcg rng(9091);
  std::vector<Diagram> mix = {virtual_trefoil(), hopf_link()};
  std::vector<Diagram> pool = {
      virtual_trefoil(), torus2q(3), hopf_link(), disjoint_union(mix),
      parse_diagram("O1+ O2+\nU1+ U2+\n()\n").diagram,
  };
  for (int i = 0; i < 6; ++i)
    pool.push_back(random_diagram(1 + static_cast<int>(rng.below(6)),
                                  1 + static_cast<int>(rng.below(3)), rng.next()));
  for (const Diagram& d : pool) {
    Fingerprint fp = fingerprint(d);
    for (int i = 0; i < 25; ++i) CHECK(fingerprint(testing::scramble(d, rng)) == fp);
  }
}

TEST_CASE("fingerprint canonicalizes the component order") {
  Diagram a = parse_diagram("O1+ O2+\nU1+ U2+\n").diagram;
  Diagram b = parse_diagram("U1+ U2+\nO1+ O2+\n").diagram;
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK(fingerprint(a).to_string() == "n=2;lk=[[0,0],[2,0]];ow=[0,0]");
}

TEST_CASE("fingerprint rendering") {
  CHECK(fingerprint(virtual_trefoil()).to_string() == "n=1;lk=[[0]];ow=[2]");
  CHECK(fingerprint(Diagram{}).to_string() == "n=0;lk=[];ow=[]");
  CHECK(fingerprint(hopf_link()).to_string() == "n=2;lk=[[0,1],[1,0]];ow=[0,0]");
}

TEST_CASE("obstruction verdict for the virtual trefoil at m = 2") {
  Diagram vt = virtual_trefoil();
  Verdict v = obstruct(vt, canonical_cut_system(vt), 2);
  CHECK(v.obstructed);
  CHECK(v.cover_fp.to_string() == "n=2;lk=[[0,2],[2,0]];ow=[0,0]");
  CHECK(v.union_fp.to_string() == "n=2;lk=[[0,0],[0,0]];ow=[2,2]");
}

TEST_CASE("classical diagrams are never obstructed") {
  for (int q : {2, 3, 4, 5}) {
    Diagram d = torus2q(q);
    CutSystem p = canonical_cut_system(d);
    for (int m : {2, 3}) {
      Verdict v = obstruct(d, p, m);
      CHECK(!v.obstructed);
      CHECK(v.cover_fp == v.union_fp);
    }
  }
}

TEST_CASE("invariants json carries every field") {
  Diagram vt = virtual_trefoil();
  nlohmann::json j = invariants_json(vt);
  CHECK(j["components"] == 1);
  CHECK(j["writhe"] == 2);
  CHECK(j["linking"] == nlohmann::json::array({{0}}));
  CHECK(j["odd_writhe"] == nlohmann::json::array({2}));
  CHECK(j["fingerprint"] == "n=1;lk=[[0]];ow=[2]");
}
