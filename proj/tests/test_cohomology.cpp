#include <doctest.h>

#include <random>

#include "core/cohomology.hpp"
#include "core/families.hpp"

using namespace hh2;

namespace {

struct Pipe {
  Presentation pres;
  QuotientAlgebra A;
  RelationSet f2;
  ResolutionFront front;
  CochainData data;
  CohomologyReport rep;

  explicit Pipe(const char* spec_text, unsigned long ch = 0)
      : pres(make(spec_text, ch)),
        A(rebuild(pres)),
        f2{pres.relations, pres.relation_labels},
        front(build_front(A, f2)),
        data(cochain_data(A, front)),
        rep(hh_report(A, front, data)) {}

  static Presentation make(const char* spec_text, unsigned long ch) {
    FamilySpec spec = parse_family_spec(spec_text);
    spec.characteristic = spec.id == FamilyId::nonstd ? 2 : ch;
    return make_family(spec);
  }
  // minimalize in place, then build the tracked quotient
  QuotientAlgebra rebuild(Presentation& p) {
    QuotientAlgebra raw = build_quotient(p);
    RelationSet min = minimalize_relations(raw, p.relations, p.relation_labels);
    p.relations = min.elements;
    p.relation_labels = min.labels;
    return build_quotient(p, 64, /*track=*/true);
  }

  int rel_index(const std::string& label) const {
    for (int i = 0; i < f2.size(); ++i)
      if (f2.labels[i] == label) return i;
    REQUIRE(false);
    return -1;
  }
  AlgElement vertex(const char* name) const {
    return A.of_vertex(pres.quiver.find_vertex(name));
  }
  AlgElement elem(std::initializer_list<const char*> arrows) const {
    Path p;
    for (const char* n : arrows) {
      int a = pres.quiver.find_arrow(n);
      REQUIRE(a >= 0);
      if (p.arrows.empty())
        p = Path::of_arrow(pres.quiver, a);
      else {
        p.arrows.push_back(a);
        p.terminus = pres.quiver.arrow(a).dst;
      }
    }
    return A.normal_form(p);
  }
  // membership + rank test: the given cocycles lie in Ker d3, outside Im d2,
  // and together with Im d2 they span Ker d3.
  void check_basis_recognition(const std::vector<Cocycle>& cs) const {
    Rref<> span(pres.field, data.hom[2].dim());
    for (const auto& col : matrix_columns(data.d2)) span.add_row(col);
    int rank_im = span.rank();
    for (const auto& c : cs) {
      CHECK(is_cocycle(A, data, c));
      CHECK_FALSE(cocycle_is_coboundary(A, data, c));
      CHECK(span.add_row(c.vec));  // independent of Im d2 and the others
    }
    CHECK(span.rank() == rank_im + static_cast<int>(cs.size()));
    CHECK(span.rank() == data.hom[2].dim() - rep.rank_d3);  // spans Ker d3
  }
};

}  // namespace

TEST_CASE("cochain matrices compose to zero") {
  for (const char* spec : {"D:n=4,s=1,t=2", "nonstd:m=2", "D3m-std:m=3,s=1"}) {
    Pipe p(spec);
    CHECK(p.data.d2.multiply(p.data.d1).is_zero());
    CHECK(p.data.d3.multiply(p.data.d2).is_zero());
  }
}

TEST_CASE("L(D5,1,2): the published ranks and the eta cocycle") {
  Pipe p("D:n=5,s=1,t=2");
  CHECK(p.rep.rank_d2 == 2);                             // dim Im d2
  CHECK(p.rep.dim_hom[2] - p.rep.rank_d3 == 3);          // dim Ker d3
  CHECK(p.rep.hh2 == 1);
  REQUIRE(p.rep.basis.size() == 1);

  // eta: e1 on f2_1_2, e4 on f2_2_5, e5 on f2_2_6, -a2 on f2_3_2
  Cocycle eta = make_cocycle(
      p.A, p.data,
      {{p.rel_index("f2_1_2"), p.vertex("v1")},
       {p.rel_index("f2_2_5"), p.vertex("v4")},
       {p.rel_index("f2_2_6"), p.vertex("v5")},
       {p.rel_index("f2_3_2"), p.A.scalar_multiple(p.pres.field.from_long(-1), p.elem({"a2"}))}});
  p.check_basis_recognition({eta});

  // the reported representative agrees with eta up to a coboundary
  Rref<> span(p.pres.field, p.data.hom[2].dim());
  for (const auto& col : matrix_columns(p.data.d2)) span.add_row(col);
  span.add_row(eta.vec);
  CHECK_FALSE(span.add_row(p.rep.basis[0].vec));
}

TEST_CASE("eta is not a coboundary but d2 images are") {
  Pipe p("D:n=5,s=1,t=2");
  CHECK(cocycle_is_coboundary(p.A, p.data, Cocycle{}));  // zero cocycle
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    SparseVec f;
    for (int i = 0; i < p.data.hom[1].dim(); ++i) {
      Scalar c = p.pres.field.from_long(coeff(rng));
      if (!c.is_zero()) f.emplace_back(i, c);
    }
    Cocycle img{p.data.d2.apply(f)};
    CHECK(cocycle_is_coboundary(p.A, p.data, img));
  }
}

TEST_CASE("HH^2 = 1 for L(D_n,1,2), n = 4, 5, 6") {
  for (const char* spec : {"D:n=4,s=1,t=2", "D:n=5,s=1,t=2", "D:n=6,s=1,t=2"}) {
    Pipe p(spec);
    CHECK(p.rep.hh2 == 1);
  }
}

TEST_CASE("standard D3m at s=1: ranks and bases across characteristics") {
  {
    Pipe p("D3m-std:m=3,s=1", 0);
    CHECK(p.rep.dim_hom[2] - p.rep.rank_d3 == 5);  // dim Ker d3
    CHECK(p.rep.rank_d2 == 4);                     // char 0
    CHECK(p.rep.hh2 == 1);
    Cocycle h = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.vertex("v1")}});
    p.check_basis_recognition({h});
  }
  {
    Pipe p("D3m-std:m=3,s=1", 2);
    CHECK(p.rep.dim_hom[2] - p.rep.rank_d3 == 5);
    CHECK(p.rep.rank_d2 == 2);  // char 2
    CHECK(p.rep.hh2 == 3);
    Cocycle h1 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.vertex("v1")}});
    Cocycle h2 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.elem({"b"})}});
    Cocycle h3 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.elem({"b", "b", "b"})}});
    p.check_basis_recognition({h1, h2, h3});
  }
  {
    Pipe p("D3m-std:m=2,s=1", 0);
    CHECK(p.rep.hh2 == 2);
    Cocycle h1 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.vertex("v1")}});
    Cocycle h2 = make_cocycle(p.A, p.data, {{p.rel_index("f2_2"), p.vertex("v2")}});
    p.check_basis_recognition({h1, h2});
  }
  {
    Pipe p("D3m-std:m=2,s=1", 2);
    CHECK(p.rep.hh2 == 4);
    Cocycle h1 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.vertex("v1")}});
    Cocycle h2 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.elem({"b"})}});
    Cocycle h3 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.elem({"b", "b", "b"})}});
    Cocycle h4 = make_cocycle(p.A, p.data, {{p.rel_index("f2_2"), p.vertex("v2")}});
    p.check_basis_recognition({h1, h2, h3, h4});
  }
}

TEST_CASE("non-standard algebras: dimensions and the m=2 basis") {
  {
    Pipe p("nonstd:m=3");
    CHECK(p.rep.rank_d2 == 3);                     // dim Im d2, char 2
    CHECK(p.rep.dim_hom[2] - p.rep.rank_d3 == 5);  // dim Ker d3
    CHECK(p.rep.hh2 == 2);
    Cocycle h1 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.vertex("v1")}});
    Cocycle h2 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.elem({"b"})}});
    p.check_basis_recognition({h1, h2});
  }
  {
    Pipe p("nonstd:m=2");
    CHECK(p.rep.rank_d2 == 3);
    CHECK(p.rep.dim_hom[2] - p.rep.rank_d3 == 6);
    CHECK(p.rep.hh2 == 3);
    Cocycle h1 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.vertex("v1")}});
    Cocycle h2 = make_cocycle(p.A, p.data, {{p.rel_index("f2_1"), p.elem({"b"})}});
    AlgElement val = p.A.add_elements(p.elem({"a2"}), p.elem({"a2", "b"}));
    Cocycle h3 = make_cocycle(p.A, p.data,
                              {{p.rel_index("f2_2"), p.vertex("v2")}, {p.rel_index("f2_3_2"), val}});
    p.check_basis_recognition({h1, h2, h3});
  }
}

TEST_CASE("trivial algebra K has HH = (1, 0, 0)") {
  Presentation p;
  p.field = Field(0);
  p.quiver.add_vertex("v");
  p.order = PathOrder::declaration(p.quiver);
  QuotientAlgebra A = build_quotient(p, 64, true);
  RelationSet f2;
  ResolutionFront front = build_front(A, f2);
  CHECK(matrix_of_d(A, front, 1).cols() == 1);
  CHECK(matrix_of_d(A, front, 1).rows() == 0);
  CochainData data = cochain_data(A, front);
  CohomologyReport rep = hh_report(A, front, data);
  CHECK(rep.hh0 == 1);
  CHECK(rep.hh1 == 0);
  CHECK(rep.hh2 == 0);
}

TEST_CASE("HH^0 is at least one and equals the published centre dimensions") {
  for (const char* spec : {"D:n=5,s=1,t=2", "nonstd:m=2", "D3m-std:m=2,s=1"}) {
    Pipe p(spec);
    CHECK(p.rep.hh0 >= 1);
  }
}
