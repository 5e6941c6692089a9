#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/corpus.hpp"
#include "vlink/covering.hpp"
#include "vlink/cuts.hpp"
#include "vlink/invariants.hpp"
#include "vlink/io.hpp"
#include "vlink/moves.hpp"
#include "vlink/rng.hpp"

using namespace vlink;

namespace {

std::vector<Diagram> small_corpus(int count, std::uint64_t seed) {
  Lcg rng(seed);
  std::vector<Diagram> out = {virtual_trefoil(), torus2q(3), hopf_link(),
                              parse_diagram("()\n").diagram};
  for (int i = 0; i < count; ++i)
    out.push_back(random_diagram(1 + static_cast<int>(rng.below(4)),
                                 1 + static_cast<int>(rng.below(2)), rng.next()));
  return out;
}

}  // namespace

TEST_CASE("r1 insert/delete roundtrip") {
  Diagram kink = parse_diagram("O1+ U1+\n").diagram;
  Diagram twisted = apply_move(kink, R1Insert{0, 2, -1, false});
  CHECK(serialize(twisted) == "O1+ U1+ U2- O2-\n");
  CHECK(apply_move(twisted, R1Delete{2}) == kink);

  // On a free loop the only slot is 0.
  Diagram loop = parse_diagram("()\n").diagram;
  Diagram once = apply_move(loop, R1Insert{0, 0, 1, true});
  CHECK(serialize(once) == "O1+ U1+\n");
  CHECK(apply_move(once, R1Delete{1}) == loop);
}

TEST_CASE("r1 delete needs an adjacent kink") {
  Diagram vt = virtual_trefoil();  // over and under separated by one passage
  CHECK_THROWS_AS(apply_move(vt, R1Delete{1}), Error);
  CHECK_THROWS_AS(apply_move(vt, R1Delete{9}), Error);
  CHECK(enumerate_sites(vt, MoveFamily::R1Delete).empty());

  Diagram kink = parse_diagram("O1+ U1+\n").diagram;
  auto sites = enumerate_sites(kink, MoveFamily::R1Delete);
  REQUIRE(sites.size() == 1);
  CHECK(std::get<R1Delete>(sites[0]) == R1Delete{1});
}

TEST_CASE("r2 insert literals and roundtrip") {
  Diagram two = parse_diagram("O1+ U1+\nO2+ U2+\n").diagram;
  Diagram par = apply_move(two, R2Insert{0, 1, 1, 2, false});
  CHECK(serialize(par) == "O1+ O3+ O4- U1+\nO2+ U2+ U3+ U4-\n");
  CHECK(par.signs.at(3) == 1);
  CHECK(par.signs.at(4) == -1);
  CHECK(apply_move(par, R2Delete{3, 4}) == two);

  Diagram anti = apply_move(two, R2Insert{0, 1, 1, 2, true});
  CHECK(serialize(anti) == "O1+ O3- O4+ U1+\nO2+ U2+ U4+ U3-\n");
  CHECK(apply_move(anti, R2Delete{3, 4}) == two);
}

TEST_CASE("r2 insert on a single strand") {
  Diagram kink = parse_diagram("O1+ U1+\n").diagram;
  // Under pair at the smaller slot: the over slot must not drift.
  Diagram d = apply_move(kink, R2Insert{0, 2, 0, 1, false});
  CHECK(serialize(d) == "O1+ U2+ U3- U1+ O2+ O3-\n");
  CHECK(apply_move(d, R2Delete{2, 3}) == kink);

  // Equal slots nest the under pair right after the over pair.
  Diagram e = apply_move(kink, R2Insert{0, 1, 0, 1, false});
  CHECK(serialize(e) == "O1+ O2+ O3- U2+ U3- U1+\n");
  CHECK(apply_move(e, R2Delete{2, 3}) == kink);
}

TEST_CASE("r2 delete validation") {
  Diagram vt = virtual_trefoil();  // equal signs: no site
  CHECK(enumerate_sites(vt, MoveFamily::R2Delete).empty());
  CHECK_THROWS_AS(apply_move(vt, R2Delete{1, 2}), Error);
  CHECK_THROWS_AS(apply_move(vt, R2Delete{1, 1}), Error);
  CHECK_THROWS_AS(apply_move(vt, R2Delete{1, 7}), Error);

  // Opposite signs but the over passages are not adjacent.
  Diagram far = parse_diagram("O1+ U2- U1+ O2-\n").diagram;
  CHECK_THROWS_AS(apply_move(far, R2Delete{1, 2}), Error);
}

TEST_CASE("r2 delete accepts both under orders") {
  // Antiparallel shape: unders sit in the reverse order.
  Diagram anti = parse_diagram("O1- O2+\nU2+ U1-\n").diagram;
  auto sites = enumerate_sites(anti, MoveFamily::R2Delete);
  REQUIRE(sites.size() == 1);
  Diagram gone = apply_move(anti, std::get<R2Delete>(sites[0]));
  CHECK(serialize(gone) == "()\n()\n");
}

TEST_CASE("r3 sites demand height order and planar chirality") {
  CHECK(enumerate_sites(torus2q(3), MoveFamily::R3Slide).empty());

  // Shape alone is not enough: both candidate triples here put the strands'
  // crossings in an order no planar triangle with these signs produces.
  Diagram ladder = parse_diagram("O1+ O2+ O3+ U1+ U2+ U3+\n").diagram;
  CHECK(enumerate_sites(ladder, MoveFamily::R3Slide).empty());

  // Closure of a three-strand braid word with a genuine slide triangle.
  Diagram braid = parse_diagram("O1+ O2+ U2+ U3+\nU1+ O3+\n").diagram;
  auto sites = enumerate_sites(braid, MoveFamily::R3Slide);
  REQUIRE(sites.size() == 1);

  R3Slide only = std::get<R3Slide>(sites[0]);
  Diagram slid = apply_move(braid, only);
  CHECK(serialize(slid) == "O2+ O1+ U3+ U2+\nO3+ U1+\n");
  CHECK(fingerprint(slid) == fingerprint(braid));
  // The slide is an involution at its site, and the image site is the only one.
  CHECK(apply_move(slid, only) == braid);
  CHECK(enumerate_sites(slid, MoveFamily::R3Slide).size() == 1);
}

TEST_CASE("r3 rejects pairs that do not form a slide triangle") {
  Diagram ladder = parse_diagram("O1+ O2+ O3+ U1+ U2+ U3+\n").diagram;
  R3Slide bogus;
  bogus.pair_starts = {std::pair{0, 0}, {0, 1}, {0, 2}};  // overlapping pairs
  CHECK_THROWS_AS(apply_move(ladder, bogus), Error);
  R3Slide missing;
  missing.pair_starts = {std::pair{0, 0}, {2, 0}, {3, 0}};  // no such component
  CHECK_THROWS_AS(apply_move(ladder, missing), Error);
  R3Slide fake;  // right shape and height order, impossible chirality
  fake.pair_starts = {std::pair{0, 0}, {0, 2}, {0, 4}};
  CHECK_THROWS_AS(apply_move(ladder, fake), Error);
}

TEST_CASE("every enumerated site applies, stays valid, keeps the fingerprint") {
  Lcg rng(7777);
  for (const Diagram& d : small_corpus(8, 4040)) {
    Fingerprint fp = fingerprint(d);
    for (MoveFamily family :
         {MoveFamily::R1Insert, MoveFamily::R1Delete, MoveFamily::R2Insert,
          MoveFamily::R2Delete, MoveFamily::R3Slide}) {
      auto sites = enumerate_sites(d, family);
      // Insert families are everywhere applicable; cap the sample.
      if (sites.size() > 40) {
        std::vector<RMoveSpec> sample;
        for (int i = 0; i < 40; ++i) sample.push_back(sites[rng.below(sites.size())]);
        sites = std::move(sample);
      }
      for (const RMoveSpec& mv : sites) {
        Diagram next = apply_move(d, mv);
        CHECK(validate(next).empty());
        CHECK(fingerprint(next) == fp);
      }
    }
  }
}

TEST_CASE("covering fingerprints are blind to every move family") {
  // The base fingerprint is too coarse to notice a bad slide on a knot; the
  // double cover is not.
  Lcg rng(5151);
  std::vector<Diagram> pool = {
      parse_diagram("O1+ O2+ U2+ U3+\nU1+ O3+\n").diagram};
  for (int i = 0; i < 25; ++i) {
    Diagram base = random_diagram(1 + static_cast<int>(rng.below(3)),
                                  1 + static_cast<int>(rng.below(2)), rng.next());
    pool.push_back(random_walk(base, 4, rng.next()).diagram);
  }
  auto cov = [](const Diagram& x) {
    return fingerprint(cover(x, canonical_cut_system(x), 2).diagram);
  };
  int slides = 0;
  for (const Diagram& d : pool) {
    Fingerprint before = cov(d);
    for (MoveFamily family :
         {MoveFamily::R1Insert, MoveFamily::R1Delete, MoveFamily::R2Insert,
          MoveFamily::R2Delete, MoveFamily::R3Slide}) {
      auto sites = enumerate_sites(d, family);
      if (family == MoveFamily::R3Slide) slides += static_cast<int>(sites.size());
      if (sites.size() > 6) {
        std::vector<RMoveSpec> sample;
        for (int i = 0; i < 6; ++i) sample.push_back(sites[rng.below(sites.size())]);
        sites = std::move(sample);
      }
      for (const RMoveSpec& mv : sites)
        CHECK(cov(apply_move(d, mv)) == before);
    }
  }
  CHECK(slides > 0);  // the pool must actually exercise the slide rule
}

TEST_CASE("move specs roundtrip through json") {
  Diagram ladder = parse_diagram("O1+ O2+ O3+ U1+ U2+ U3+\nU4- O4-\n").diagram;
  int checked = 0;
  for (MoveFamily family :
       {MoveFamily::R1Insert, MoveFamily::R1Delete, MoveFamily::R2Insert,
        MoveFamily::R2Delete, MoveFamily::R3Slide}) {
    for (const RMoveSpec& mv : enumerate_sites(ladder, family)) {
      nlohmann::json j = move_to_json(mv);
      CHECK(move_from_json(j) == mv);
      CHECK(j.contains("move"));
      ++checked;
    }
  }
  CHECK(checked > 10);

  // No r3 site survives on that diagram, so roundtrip a spec directly.
  R3Slide r3;
  r3.pair_starts = {std::pair{0, 0}, {0, 2}, {1, 0}};
  RMoveSpec wrapped = r3;
  CHECK(move_from_json(move_to_json(wrapped)) == wrapped);

  CHECK_THROWS_AS(move_from_json(nlohmann::json{{"move", "r9"}}), Error);
}

TEST_CASE("random walks are deterministic and replayable") {
  Diagram vt = virtual_trefoil();
  WalkResult a = random_walk(vt, 12, 99);
  WalkResult b = random_walk(vt, 12, 99);
  CHECK(a.diagram == b.diagram);
  CHECK(a.log == b.log);
  CHECK(a.log.size() == 12);

  Diagram replay = vt;
  for (const RMoveSpec& mv : a.log) replay = apply_move(replay, mv);
  CHECK(replay == a.diagram);
  CHECK(fingerprint(a.diagram) == fingerprint(vt));

  WalkResult c = random_walk(vt, 12, 100);
  CHECK(!(c.log == a.log));
}

TEST_CASE("walks keep the fingerprint across the corpus") {
  Lcg rng(31007);
  for (const Diagram& d : small_corpus(10, 8088)) {
    WalkResult w = random_walk(d, 10, rng.next());
    CHECK(validate(w.diagram).empty());
    CHECK(fingerprint(w.diagram) == fingerprint(d));
  }
}
