#include <doctest.h>

#include "core/families.hpp"
#include "core/presentation.hpp"
#include "core/quotient.hpp"

using namespace hh2;

TEST_CASE("family spec strings round-trip") {
  for (const char* s : {"nakayama:s=1,n=2", "mobius:p=1,s=1", "D:n=5,s=1,t=2", "D:n=4,s=2,t=3",
                        "D3m-std:m=2,s=1", "E:n=6,s=1,t=1", "E:n=6,s=1,t=2", "nonstd:m=3"}) {
    FamilySpec spec = parse_family_spec(s);
    CHECK(family_spec_str(spec) == s);
    CHECK(parse_family_spec(family_spec_str(spec)) == spec);
  }
  // aliases
  CHECK(parse_family_spec("D4:s=2").id == FamilyId::d4_t3);
  CHECK(parse_family_spec("E6:s=1").id == FamilyId::e6_t2);
  CHECK_THROWS_AS(parse_family_spec("D:n=5,s=1,t=3"), Error);
  CHECK_THROWS_AS(parse_family_spec("E:n=7,s=1,t=2"), Error);
  CHECK_THROWS_AS(parse_family_spec("frobnitz:x=1"), Error);
  CHECK_THROWS_AS(parse_family_spec("D:n=5"), Error);
}

TEST_CASE("parameter ranges are enforced") {
  CHECK_THROWS_AS(make_family(parse_family_spec("D:n=3,s=1,t=1")), Error);
  CHECK_THROWS_AS(make_family(parse_family_spec("D3m-std:m=1,s=1")), Error);
  CHECK_THROWS_AS(make_family(parse_family_spec("D3m-std:m=2,s=3")), Error);  // 3 | s
  CHECK_THROWS_AS(make_family(parse_family_spec("E:n=9,s=1,t=1")), Error);
  CHECK_THROWS_AS(make_family(parse_family_spec("nonstd:m=1")), Error);
  // non-standard algebras exist only in characteristic 2
  FamilySpec bad = parse_family_spec("nonstd:m=2");
  bad.characteristic = 0;
  CHECK_THROWS_AS(make_family(bad), Error);
  bad.characteristic = 3;
  CHECK_THROWS_AS(make_family(bad), Error);
}

TEST_CASE("published example presentations") {
  // Nakayama(1,2): one vertex, one loop, a^3 = 0
  Presentation nak = make_family(parse_family_spec("nakayama:s=1,n=2"));
  CHECK(nak.quiver.vertex_count() == 1);
  CHECK(nak.quiver.arrow_count() == 1);
  REQUIRE(nak.relations.size() == 1);
  CHECK(nak.relations[0].str(nak.quiver) == "a.a.a");

  // D3m-std(2,1): Q(D6,1/3) with beta^2 = a1 a2 and a2 a1 = 0
  Presentation d3m = make_family(parse_family_spec("D3m-std:m=2,s=1"));
  CHECK(d3m.quiver.vertex_count() == 2);
  REQUIRE(d3m.relations.size() == 2);
  CHECK(d3m.relations[0].str(d3m.quiver) == "-a1.a2 + b.b");
  CHECK(d3m.relations[1].str(d3m.quiver) == "a2.a1");

  // nonstd(2) over F_2: three relations, the mixed one included
  FamilySpec ns = parse_family_spec("nonstd:m=2");
  ns.characteristic = 2;
  Presentation lm = make_family(ns);
  REQUIRE(lm.relations.size() == 3);
  CHECK(lm.relations[0].str(lm.quiver) == "a1.a2 + b.b");  // char 2: -1 = 1
  CHECK(lm.relations[1].str(lm.quiver) == "a2.a1 + a2.b.a1");
  CHECK(lm.relations[2].str(lm.quiver) == "a2.a1.a2");

  // Mobius(1,1) minimalizes to the preprojective-style three relations
  Presentation mob = make_family(parse_family_spec("mobius:p=1,s=1"));
  CHECK(mob.quiver.vertex_count() == 3);
  CHECK(mob.quiver.arrow_count() == 4);
  CHECK(mob.relations.size() == 3);
}

TEST_CASE("expected HH^2 dimensions reproduce the published case analysis") {
  auto expect = [](const char* s, unsigned long ch, int want) {
    FamilySpec spec = parse_family_spec(s);
    spec.characteristic = ch;
    CHECK(expected_hh2(spec).value == want);
  };
  expect("nakayama:s=1,n=2", 0, 3);
  expect("nakayama:s=2,n=3", 0, 2);
  expect("nakayama:s=3,n=5", 0, 2);
  expect("mobius:p=1,s=1", 0, 1);
  expect("mobius:p=1,s=2", 0, 0);
  expect("mobius:p=2,s=1", 0, 0);
  expect("D:n=5,s=1,t=2", 0, 1);
  expect("D:n=5,s=2,t=2", 0, 0);
  expect("D:n=5,s=1,t=1", 0, 0);
  expect("D:n=4,s=1,t=3", 0, 0);
  expect("D3m-std:m=2,s=1", 0, 2);
  expect("D3m-std:m=2,s=1", 2, 4);
  expect("D3m-std:m=3,s=1", 0, 1);
  expect("D3m-std:m=3,s=1", 2, 3);
  expect("D3m-std:m=3,s=2", 2, 0);
  expect("E:n=7,s=1,t=1", 0, 0);
  expect("E:n=6,s=1,t=2", 0, 0);
  expect("nonstd:m=2", 2, 3);
  expect("nonstd:m=3", 2, 2);
  expect("nonstd:m=4", 2, 2);
}

TEST_CASE("derived invariance witness: standard vs non-standard differ by one") {
  for (int m : {2, 3}) {
    FamilySpec std_spec = parse_family_spec("D3m-std:m=" + std::to_string(m) + ",s=1");
    std_spec.characteristic = 2;
    FamilySpec ns_spec = parse_family_spec("nonstd:m=" + std::to_string(m));
    ns_spec.characteristic = 2;
    CHECK(expected_hh2(std_spec).value - expected_hh2(ns_spec).value == 1);
  }
}

TEST_CASE("every grid presentation validates cleanly and builds a quotient") {
  for (const FamilySpec& spec : acceptance_grid()) {
    Presentation p = make_family(spec);
    INFO(family_spec_str(spec));
    CHECK(validate(p).empty());
    QuotientAlgebra A = build_quotient(p);
    CHECK(A.dimension() > 0);
  }
}

TEST_CASE("the acceptance grid covers the published table") {
  auto grid = acceptance_grid();
  CHECK(grid.size() == 28);
  int nonstd_count = 0;
  for (const auto& spec : grid) {
    if (spec.id == FamilyId::nonstd) {
      ++nonstd_count;
      CHECK(spec.characteristic == 2);
    }
  }
  CHECK(nonstd_count == 3);
}
