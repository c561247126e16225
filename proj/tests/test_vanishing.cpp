#include <doctest.h>

#include "core/cohomology.hpp"
#include "core/families.hpp"
#include "core/vanishing.hpp"

using namespace hh2;

namespace {

struct Setup {
  Presentation pres;
  QuotientAlgebra A;
  RelationSet f2;

  explicit Setup(const char* spec_text, unsigned long ch = 0) : pres(make(spec_text, ch)), A(rebuild(pres)) {
    f2 = RelationSet{pres.relations, pres.relation_labels};
  }
  static Presentation make(const char* spec_text, unsigned long ch) {
    FamilySpec spec = parse_family_spec(spec_text);
    spec.characteristic = spec.id == FamilyId::nonstd ? 2 : ch;
    return make_family(spec);
  }
  QuotientAlgebra rebuild(Presentation& p) {
    QuotientAlgebra raw = build_quotient(p);
    RelationSet min = minimalize_relations(raw, p.relations, p.relation_labels);
    p.relations = min.elements;
    p.relation_labels = min.labels;
    return build_quotient(p, 64, /*track=*/true);
  }
};

Path make_path(const Quiver& q, std::initializer_list<const char*> names) {
  Path p;
  for (const char* n : names) {
    int a = q.find_arrow(n);
    REQUIRE(a >= 0);
    if (p.arrows.empty())
      p = Path::of_arrow(q, a);
    else {
      p.arrows.push_back(a);
      p.terminus = q.arrow(a).dst;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("boundary set collects endpoint pairs") {
  const char* text =
      "field rational\nvertices u v w\narrows a: u -> v  b: v -> w  c: w -> u\nrelations\n  a.b\n  b.c\n  c.a\n";
  Presentation p = parse_presentation(text);
  RelationSet f2{p.relations, p.relation_labels};
  BoundarySet bdy = boundary_set(f2);
  REQUIRE(bdy.pairs.size() == 3);
  CHECK(bdy.pairs[0] == std::pair<int, int>(0, 2));  // (u, w)

  RelationSet empty;
  CHECK(boundary_set(empty).pairs.empty());
}

TEST_CASE("G2 of the loop algebra is all of 1.L.1") {
  Setup s("nakayama:s=1,n=2");
  auto g2 = g2_set(s.A, s.f2);
  REQUIRE(g2.size() == 3);  // e, a, a^2 in lenlex order
  CHECK(g2[0].is_trivial());
  CHECK(g2[2].length() == 2);
}

TEST_CASE("G2 of L(D_n,2,2) consists of the two beta paths") {
  Setup s("D:n=4,s=2,t=2");
  auto g2 = g2_set(s.A, s.f2);
  REQUIRE(g2.size() == 2);
  // ascending lenlex: segment-1 arrows rank below segment-0 arrows
  CHECK(g2[0].str(s.pres.quiver) == "b0_1.b1_1");
  CHECK(g2[1].str(s.pres.quiver) == "b0_0.b1_0");
}

TEST_CASE("layer decomposition") {
  Quiver q;
  q.add_vertex("u");
  q.add_arrow("a", 0, 0);
  q.add_arrow("b", 0, 0);

  // disjoint supports: separated in one layer
  auto an = l_layers({make_path(q, {"a"}), make_path(q, {"b"})});
  CHECK(an.separated);
  REQUIRE(an.layers.size() == 1);
  CHECK(an.layers[0].size() == 2);

  // both arrows shared: L0 empty, not separated
  auto bad = l_layers({make_path(q, {"a", "b"}), make_path(q, {"b", "a"})});
  CHECK_FALSE(bad.separated);
  CHECK(bad.layers.empty());

  // second layer appears once the first is removed
  Quiver q3;
  q3.add_vertex("u");
  q3.add_arrow("a", 0, 0);
  q3.add_arrow("b", 0, 0);
  q3.add_arrow("c", 0, 0);
  auto two = l_layers({make_path(q3, {"a", "b"}), make_path(q3, {"b", "c"}),
                       make_path(q3, {"b"})});
  CHECK(two.separated);
  REQUIRE(two.layers.size() == 2);
}

TEST_CASE("vanishing criterion applies to L(D4,2,2) with valid witnesses") {
  Setup s("D:n=4,s=2,t=2");
  VanishingVerdict v = vanishing_check(s.A, s.f2);
  REQUIRE(v.applicable);
  REQUIRE(v.witnesses.size() == 4);  // two relations per segment
  std::vector<Path> Y;
  for (const auto& w : v.witnesses) {
    Y.push_back(w.p);
    Y.push_back(w.q);
  }
  for (const auto& w : v.witnesses) {
    // the associated arrow occurs exactly once in q and nowhere else in Y
    int count = 0;
    for (int a : w.q.arrows) count += a == w.arrow ? 1 : 0;
    CHECK(count == 1);
    for (const Path& other : Y) {
      if (other == w.q) continue;
      CHECK(std::find(other.arrows.begin(), other.arrows.end(), w.arrow) == other.arrows.end());
    }
  }
}

TEST_CASE("vanishing criterion is not applicable at s=1 (dim vLw > 1)") {
  for (const char* spec : {"D:n=4,s=1,t=2", "D:n=5,s=1,t=1", "D3m-std:m=2,s=1", "E:n=6,s=1,t=1"}) {
    Setup s(spec);
    VanishingVerdict v = vanishing_check(s.A, s.f2);
    CHECK_FALSE(v.applicable);
    CHECK(v.failure_reason.find("dim vLw > 1") != std::string::npos);
  }
}

TEST_CASE("monomial algebra with all boundary hom spaces zero is applicable vacuously") {
  const char* text =
      "field rational\nvertices u v w\narrows a: u -> v  b: v -> w  c: w -> u\nrelations\n  a.b\n  b.c\n  c.a\n";
  Presentation p = parse_presentation(text);
  QuotientAlgebra A = build_quotient(p);
  RelationSet f2{p.relations, p.relation_labels};
  VanishingVerdict v = vanishing_check(A, f2);
  CHECK(v.applicable);
  CHECK(v.witnesses.empty());
  CHECK(v.g2.empty());
}

TEST_CASE("the witness map psi realizes phi_{p,x} as a coboundary") {
  // For each witness (x = p - q, arrow a): psi in Hom(Q^1, L) sending the
  // a-summand generator to -a satisfies psi A2 = phi_{p,x}.
  Setup s("D:n=4,s=2,t=2");
  VanishingVerdict v = vanishing_check(s.A, s.f2);
  REQUIRE(v.applicable);
  ResolutionFront front = build_front(s.A, s.f2);
  CochainData data = cochain_data(s.A, front);
  for (const auto& w : v.witnesses) {
    int psi_flat = data.hom[1].flat_index(w.arrow, s.A.nontip_index(Path::of_arrow(s.pres.quiver, w.arrow)));
    REQUIRE(psi_flat >= 0);
    SparseVec psi{{psi_flat, s.pres.field.from_long(-1)}};
    SparseVec image = data.d2.apply(psi);
    int phi_flat = data.hom[2].flat_index(w.rel, s.A.nontip_index(w.p));
    REQUIRE(phi_flat >= 0);
    SparseVec phi{{phi_flat, s.pres.field.one()}};
    CHECK(image == phi);
  }
}

TEST_CASE("the D3m boundary pairs are loops at s = 2, so the criterion cannot apply") {
  // At s = 2 the alpha chains return to their own hub (i+2 = i mod 2), the
  // identity joins v Lambda w, and HH^2 is in fact nonzero there; the layer
  // condition also fails for larger s because consecutive beta arrows chain.
  for (const char* spec : {"D3m-std:m=2,s=2", "D3m-std:m=2,s=4"}) {
    Setup s(spec);
    VanishingVerdict v = vanishing_check(s.A, s.f2);
    CHECK_FALSE(v.applicable);
  }
}

TEST_CASE("soundness: applicable instances have HH^2 = 0") {
  for (const char* spec : {"D:n=4,s=2,t=2", "D:n=5,s=2,t=1", "D:n=4,s=2,t=3", "D:n=5,s=2,t=2",
                           "E:n=6,s=2,t=1", "E:n=6,s=2,t=2"}) {
    Setup s(spec);
    VanishingVerdict v = vanishing_check(s.A, s.f2);
    INFO(spec);
    CHECK(v.applicable);
    ResolutionFront front = build_front(s.A, s.f2);
    CochainData data = cochain_data(s.A, front);
    CohomologyReport rep = hh_report(s.A, front, data);
    CHECK(rep.hh2 == 0);
  }
}
