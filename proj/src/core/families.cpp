#include "core/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/resolution.hpp"

namespace hh2 {

namespace {

// The Mobius catalogue and the s >= 2 catalogues for D4(s,3) and E6(s,2) are
// stated with redundant relations; replace them by a minimal generating set.
Presentation minimalized(Presentation pres) {
  QuotientAlgebra A = build_quotient(pres);
  RelationSet f2 = minimalize_relations(A, pres.relations, pres.relation_labels);
  pres.relations = std::move(f2.elements);
  pres.relation_labels = std::move(f2.labels);
  return pres;
}

int parse_int_field(const std::map<std::string, int>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw Error(Error::Kind::invalid, "family spec is missing parameter '" + key + "'");
  return it->second;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Small helper for assembling presentations programmatically.
struct Builder {
  Presentation pres;

  explicit Builder(Field f) { pres.field = std::move(f); }

  int v(const std::string& name) { return pres.quiver.add_vertex(name); }
  int a(const std::string& name, int src, int dst) { return pres.quiver.add_arrow(name, src, dst); }

  Path path(const std::vector<std::string>& arrows) const {
    Path p;
    for (const auto& name : arrows) {
      int id = pres.quiver.find_arrow(name);
      if (id < 0) throw Error(Error::Kind::internal, "builder: unknown arrow " + name);
      if (p.arrows.empty()) {
        p = Path::of_arrow(pres.quiver, id);
      } else {
        if (p.terminus != pres.quiver.arrow(id).src)
          throw Error(Error::Kind::internal, "builder: non-composable path at " + name);
        p.arrows.push_back(id);
        p.terminus = pres.quiver.arrow(id).dst;
      }
    }
    return p;
  }

  void rel(const std::string& label, const FreeElement& e) {
    pres.relations.push_back(e);
    pres.relation_labels.push_back(label);
  }
  void mono(const std::string& label, const std::vector<std::string>& arrows) {
    rel(label, FreeElement::of_path(pres.field, path(arrows)));
  }
  void diff(const std::string& label, const std::vector<std::string>& lhs,
            const std::vector<std::string>& rhs) {
    FreeElement e = add(pres.field, FreeElement::of_path(pres.field, path(lhs)),
                        scale(pres.field, pres.field.from_long(-1),
                              FreeElement::of_path(pres.field, path(rhs))));
    rel(label, e);
  }

  void finish() { pres.order = PathOrder::declaration(pres.quiver); }
};

// Segment-suffixed identifiers; the suffix is dropped when there is a single
// segment so the s=1 presentations read like the published ones.
std::string seg(const std::string& base, int i, int s) {
  return s == 1 ? base : base + "_" + std::to_string(i);
}

std::string num(int k) { return std::to_string(k); }

Presentation make_nakayama(const FamilySpec& spec) {
  int s = spec.s, n = spec.n;
  if (s < 1 || n < 1) throw Error(Error::Kind::invalid, "nakayama requires s >= 1 and n >= 1");
  Builder b{Field(spec.characteristic)};
  for (int i = 1; i <= s; ++i) b.v("v" + num(i));
  auto arrow_name = [&](int i) {  // 1-based, cyclic
    int j = ((i - 1) % s) + 1;
    return s == 1 ? std::string("a") : "a" + num(j);
  };
  for (int i = 1; i <= s; ++i) b.a(arrow_name(i), i - 1, i % s);
  for (int i = 1; i <= s; ++i) {
    std::vector<std::string> w;
    for (int k = 0; k <= n; ++k) w.push_back(arrow_name(i + k));
    b.mono("f_" + num(i), w);
  }
  b.finish();
  b.pres.name = family_display_name(spec);
  return b.pres;
}

Presentation make_mobius(const FamilySpec& spec) {
  int p = spec.p, s = spec.s;
  if (p < 1 || s < 1) throw Error(Error::Kind::invalid, "mobius requires p >= 1 and s >= 1");
  Builder b{Field(spec.characteristic)};
  for (int i = 0; i < s; ++i) {
    b.v(seg("u", i, s));
    for (int k = 1; k <= p; ++k) b.v(seg("x" + num(k), i, s));
    for (int k = 1; k <= p; ++k) b.v(seg("y" + num(k), i, s));
  }
  auto hub = [&](int i) { return b.pres.quiver.find_vertex(seg("u", ((i % s) + s) % s, s)); };
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k <= p; ++k) {
      int src = k == 0 ? hub(i) : b.pres.quiver.find_vertex(seg("x" + num(k), i, s));
      int dst = k == p ? hub(i + 1) : b.pres.quiver.find_vertex(seg("x" + num(k + 1), i, s));
      b.a(seg("a" + num(k), i, s), src, dst);
    }
    for (int k = 0; k <= p; ++k) {
      int src = k == 0 ? hub(i) : b.pres.quiver.find_vertex(seg("y" + num(k), i, s));
      int dst = k == p ? hub(i + 1) : b.pres.quiver.find_vertex(seg("y" + num(k + 1), i, s));
      b.a(seg("b" + num(k), i, s), src, dst);
    }
  }
  auto chain = [&](const char* base, int i) {
    std::vector<std::string> w;
    for (int k = 0; k <= p; ++k) w.push_back(seg(base + num(k), i, s));
    return w;
  };
  for (int i = 0; i < s; ++i) b.diff("f1_" + num(i), chain("a", i), chain("b", i));
  for (int i = 0; i + 1 < s; ++i) {
    b.mono("f2a_" + num(i), {seg("a" + num(p), i, s), seg("b0", i + 1, s)});
    b.mono("f2b_" + num(i), {seg("b" + num(p), i, s), seg("a0", i + 1, s)});
  }
  b.mono("f2a_" + num(s - 1), {seg("a" + num(p), s - 1, s), seg("a0", 0, s)});
  b.mono("f2b_" + num(s - 1), {seg("b" + num(p), s - 1, s), seg("b0", 0, s)});
  b.finish();
  // (iii): all paths of length p+2 vanish.
  int z = 0;
  for (const Path& q : enumerate_paths(b.pres.quiver, p + 2, b.pres.order))
    if (q.length() == p + 2)
      b.rel("z_" + num(++z), FreeElement::of_path(b.pres.field, q));
  b.pres.name = family_display_name(spec);
  return minimalized(std::move(b.pres));
}

// Shared D-type quiver: per segment an alpha cycle of length n-2 through the
// hub plus beta and gamma double arrows, ordered alpha > gamma > beta.
struct DQuiver {
  Builder b;
  int n, s;

  DQuiver(const FamilySpec& spec, bool alpha0_naming)
      : b{Field(spec.characteristic)}, n(spec.n), s(spec.s) {
    for (int i = 0; i < s; ++i)
      for (int k = 1; k <= n; ++k) b.v(seg("v" + num(k), i, s));
    auto vx = [&](int k, int i) {
      return b.pres.quiver.find_vertex(seg("v" + num(k), ((i % s) + s) % s, s));
    };
    for (int i = 0; i < s; ++i) {
      if (n == 4 && alpha0_naming) {
        b.a(seg("a0", i, s), vx(1, i), vx(2, i));
      } else {
        b.a(seg("a" + num(n - 2), i, s), vx(1, i), vx(n - 2, i));
        for (int j = n - 3; j >= 2; --j) b.a(seg("a" + num(j), i, s), vx(j + 1, i), vx(j, i));
      }
      b.a(seg("a1", i, s), vx(2, i), vx(1, i + 1));
      b.a(seg("g0", i, s), vx(1, i), vx(n, i));
      b.a(seg("g1", i, s), vx(n, i), vx(1, i + 1));
      b.a(seg("b0", i, s), vx(1, i), vx(n - 1, i));
      b.a(seg("b1", i, s), vx(n - 1, i), vx(1, i + 1));
    }
  }

  int wrap(int i) const { return ((i % s) + s) % s; }
  std::string ar(const std::string& base, int i) const { return seg(base, wrap(i), s); }

  std::vector<std::string> alpha_path(int i) const {  // hub_i -> hub_{i+1}, length n-2
    std::vector<std::string> w;
    for (int j = n - 2; j >= 1; --j) w.push_back(ar("a" + num(j), i));
    return w;
  }
  // f2_3_k_i = a_k .. a_1 (seg i) a_{n-2} .. a_k (seg i+1)
  std::vector<std::string> alpha_window(int k, int i) const {
    std::vector<std::string> w;
    for (int j = k; j >= 1; --j) w.push_back(ar("a" + num(j), i));
    for (int j = n - 2; j >= k; --j) w.push_back(ar("a" + num(j), i + 1));
    return w;
  }
};

Presentation make_d_type(const FamilySpec& spec) {
  int n = spec.n, s = spec.s, t = spec.t;
  if (n < 4 || s < 1 || (t != 1 && t != 2))
    throw Error(Error::Kind::invalid, "D family requires n >= 4, s >= 1, t in {1,2}");
  DQuiver d(spec, false);
  Builder& b = d.b;
  auto L = [&](const std::string& base, int i) {
    return s == 1 ? base : base + "_" + num(i);
  };
  for (int i = 0; i < s; ++i) {
    b.diff(L("f2_1_1", i), {d.ar("b0", i), d.ar("b1", i)}, {d.ar("g0", i), d.ar("g1", i)});
    b.diff(L("f2_1_2", i), {d.ar("b0", i), d.ar("b1", i)}, d.alpha_path(i));
    b.mono(L("f2_2_1", i), {d.ar("a1", i), d.ar("b0", i + 1)});
    b.mono(L("f2_2_2", i), {d.ar("a1", i), d.ar("g0", i + 1)});
    b.mono(L("f2_2_3", i), {d.ar("b1", i), d.ar("a" + num(n - 2), i + 1)});
    b.mono(L("f2_2_4", i), {d.ar("g1", i), d.ar("a" + num(n - 2), i + 1)});
  }
  if (t == 1) {
    for (int i = 0; i < s; ++i) {
      b.mono(L("f2_2_5", i), {d.ar("b1", i), d.ar("g0", i + 1)});
      b.mono(L("f2_2_6", i), {d.ar("g1", i), d.ar("b0", i + 1)});
    }
  } else if (s == 1) {
    b.mono("f2_2_5", {d.ar("b1", 0), d.ar("b0", 0)});
    b.mono("f2_2_6", {d.ar("g1", 0), d.ar("g0", 0)});
  } else {
    for (int i = 0; i + 1 < s; ++i) {
      b.mono(L("f2_2_5", i), {d.ar("b1", i), d.ar("g0", i + 1)});
      b.mono(L("f2_2_6", i), {d.ar("g1", i), d.ar("b0", i + 1)});
    }
    b.mono(L("f2_2_7", s - 1), {d.ar("b1", s - 1), d.ar("b0", 0)});
    b.mono(L("f2_2_8", s - 1), {d.ar("g1", s - 1), d.ar("g0", 0)});
  }
  for (int i = 0; i < s; ++i)
    for (int k = 2; k <= n - 3; ++k)
      b.mono(s == 1 ? "f2_3_" + num(k) : "f2_3_" + num(k) + "_" + num(i), d.alpha_window(k, i));
  b.finish();
  b.pres.name = family_display_name(spec);
  return b.pres;
}

Presentation make_d4_t3(const FamilySpec& spec) {
  int s = spec.s;
  if (s < 1) throw Error(Error::Kind::invalid, "D4 family requires s >= 1");
  FamilySpec q = spec;
  q.n = 4;
  DQuiver d(q, true);
  Builder& b = d.b;
  auto L = [&](const std::string& base, int i) {
    return s == 1 ? base : base + "_" + num(i);
  };
  for (int i = 0; i < s; ++i) {
    b.diff(L("f2_1_1", i), {d.ar("b0", i), d.ar("b1", i)}, {d.ar("g0", i), d.ar("g1", i)});
    b.diff(L("f2_1_2", i), {d.ar("b0", i), d.ar("b1", i)}, {d.ar("a0", i), d.ar("a1", i)});
  }
  if (s == 1) {
    b.mono("f2_2_1", {"b1", "a0"});
    b.mono("f2_2_2", {"a1", "g0"});
    b.mono("f2_2_3", {"g1", "b0"});
    b.mono("f2_2_4", {"g1", "g0"});
    b.mono("f2_2_5", {"b1", "b0"});
    b.mono("f2_2_6", {"a1", "a0"});
  } else {
    // Full relation catalogue; the minimalizer picks a minimal subset.
    int r = 0;
    for (int i = 0; i + 1 < s; ++i) {
      for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
               {"a1", "b0"}, {"a1", "g0"}, {"b1", "a0"}, {"g1", "a0"}, {"b1", "g0"}, {"g1", "b0"}})
        b.mono("r2_" + num(++r), {d.ar(x, i), d.ar(y, i + 1)});
    }
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"a1", "a0"}, {"a1", "g0"}, {"b1", "a0"}, {"b1", "b0"}, {"g1", "b0"}, {"g1", "g0"}})
      b.mono("r2_" + num(++r), {d.ar(x, s - 1), d.ar(y, 0)});
    b.finish();
    int z = 0;
    for (const Path& p : enumerate_paths(b.pres.quiver, 3, b.pres.order))
      if (p.length() == 3) b.rel("z_" + num(++z), FreeElement::of_path(b.pres.field, p));
    b.pres.name = family_display_name(spec);
    return minimalized(std::move(b.pres));
  }
  b.finish();
  b.pres.name = family_display_name(spec);
  return b.pres;
}

Presentation make_d3m(const FamilySpec& spec) {
  int m = spec.m, s = spec.s;
  if (m < 2 || s < 1 || s % 3 == 0)
    throw Error(Error::Kind::invalid, "D3m-std requires m >= 2, s >= 1, 3 not dividing s");
  Builder b{Field(spec.characteristic)};
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= m; ++k) b.v(seg("v" + num(k), i, s));
  auto wrap = [&](int i) { return ((i - 1) % s + s) % s + 1; };
  auto vx = [&](int k, int i) {
    return b.pres.quiver.find_vertex(seg("v" + num(k), wrap(i), s));
  };
  for (int i = 1; i <= s; ++i) {
    for (int k = 1; k < m; ++k) b.a(seg("a" + num(k), i, s), vx(k, i), vx(k + 1, i));
    b.a(seg("a" + num(m), i, s), vx(m, i), vx(1, i + 2));
    b.a(seg("b", i, s), vx(1, i), vx(1, i + 1));
  }
  auto ar = [&](const std::string& base, int i) { return seg(base, wrap(i), s); };
  auto alpha_chain = [&](int i) {
    std::vector<std::string> w;
    for (int k = 1; k <= m; ++k) w.push_back(ar("a" + num(k), i));
    return w;
  };
  auto L = [&](const std::string& base, int i) {
    return s == 1 ? base : base + "_" + num(i);
  };
  for (int i = 1; i <= s; ++i) {
    b.diff(L("f2_1", i), {ar("b", i), ar("b", i + 1)}, alpha_chain(i));
    b.mono(L("f2_2", i), {ar("a" + num(m), i), ar("a1", i + 2)});
    for (int j = 2; j <= m - 1; ++j) {
      std::vector<std::string> w;
      for (int k = j; k <= m; ++k) w.push_back(ar("a" + num(k), i));
      w.push_back(ar("b", i + 2));
      for (int k = 1; k <= j; ++k) w.push_back(ar("a" + num(k), i + 3));
      b.mono(s == 1 ? "f2_3_" + num(j) : "f2_3_" + num(j) + "_" + num(i), w);
    }
  }
  b.finish();
  b.pres.name = family_display_name(spec);
  return b.pres;
}

// Shared E-type quiver: alpha chain of length n-3, beta chain of length 3,
// gamma chain of length 2, ordered alpha > beta > gamma.
struct EQuiver {
  Builder b;
  int n, s;

  explicit EQuiver(const FamilySpec& spec) : b{Field(spec.characteristic)}, n(spec.n), s(spec.s) {
    for (int i = 0; i < s; ++i)
      for (int k = 1; k <= n; ++k) b.v(seg("v" + num(k), i, s));
    auto vx = [&](int k, int i) {
      return b.pres.quiver.find_vertex(seg("v" + num(k), ((i % s) + s) % s, s));
    };
    for (int i = 0; i < s; ++i) {
      b.a(seg("a" + num(n - 3), i, s), vx(1, i), vx(n - 3, i));
      for (int j = n - 4; j >= 2; --j) b.a(seg("a" + num(j), i, s), vx(j + 1, i), vx(j, i));
      b.a(seg("a1", i, s), vx(2, i), vx(1, i + 1));
      b.a(seg("b3", i, s), vx(1, i), vx(n - 1, i));
      b.a(seg("b2", i, s), vx(n - 1, i), vx(n - 2, i));
      b.a(seg("b1", i, s), vx(n - 2, i), vx(1, i + 1));
      b.a(seg("g2", i, s), vx(1, i), vx(n, i));
      b.a(seg("g1", i, s), vx(n, i), vx(1, i + 1));
    }
  }

  std::string ar(const std::string& base, int i) const { return seg(base, ((i % s) + s) % s, s); }
  std::vector<std::string> alpha_path(int i) const {
    std::vector<std::string> w;
    for (int j = n - 3; j >= 1; --j) w.push_back(ar("a" + num(j), i));
    return w;
  }
  std::vector<std::string> beta_path(int i) const {
    return {ar("b3", i), ar("b2", i), ar("b1", i)};
  }
};

Presentation make_e_type(const FamilySpec& spec) {
  int n = spec.n, s = spec.s;
  if ((n != 6 && n != 7 && n != 8) || s < 1)
    throw Error(Error::Kind::invalid, "E family requires n in {6,7,8} and s >= 1");
  EQuiver e(spec);
  Builder& b = e.b;
  auto L = [&](const std::string& base, int i) {
    return s == 1 ? base : base + "_" + num(i);
  };
  for (int i = 0; i < s; ++i) {
    b.diff(L("f2_1_1", i), {e.ar("g2", i), e.ar("g1", i)}, e.beta_path(i));
    b.diff(L("f2_1_2", i), {e.ar("g2", i), e.ar("g1", i)}, e.alpha_path(i));
    b.mono(L("f2_2_1", i), {e.ar("a1", i), e.ar("b3", i + 1)});
    b.mono(L("f2_2_2", i), {e.ar("a1", i), e.ar("g2", i + 1)});
    b.mono(L("f2_2_3", i), {e.ar("b1", i), e.ar("a" + num(n - 3), i + 1)});
    b.mono(L("f2_2_4", i), {e.ar("b1", i), e.ar("g2", i + 1)});
    b.mono(L("f2_2_5", i), {e.ar("g1", i), e.ar("a" + num(n - 3), i + 1)});
    b.mono(L("f2_2_6", i), {e.ar("g1", i), e.ar("b3", i + 1)});
    for (int k = 2; k <= n - 4; ++k) {
      std::vector<std::string> w;
      for (int j = k; j >= 1; --j) w.push_back(e.ar("a" + num(j), i));
      for (int j = n - 3; j >= k; --j) w.push_back(e.ar("a" + num(j), i + 1));
      b.mono(s == 1 ? "f2_3_" + num(k) : "f2_3_" + num(k) + "_" + num(i), w);
    }
    b.mono(L("f2_4", i), {e.ar("b2", i), e.ar("b1", i), e.ar("b3", i + 1), e.ar("b2", i + 1)});
  }
  b.finish();
  b.pres.name = family_display_name(spec);
  return b.pres;
}

Presentation make_e6_t2(const FamilySpec& spec) {
  int s = spec.s;
  if (s < 1) throw Error(Error::Kind::invalid, "E6 (t=2) family requires s >= 1");
  FamilySpec q = spec;
  q.n = 6;
  EQuiver e(q);
  Builder& b = e.b;
  if (s == 1) {
    b.diff("f2_1_1", {"g2", "g1"}, e.beta_path(0));
    b.diff("f2_1_2", {"g2", "g1"}, e.alpha_path(0));
    b.mono("f2_2_1", {"g1", "a3"});
    b.mono("f2_2_2", {"g1", "b3"});
    b.mono("f2_2_3", {"a1", "g2"});
    b.mono("f2_2_4", {"b1", "g2"});
    b.mono("f2_2_5", {"a1", "a3"});
    b.mono("f2_2_6", {"b1", "b3"});
    b.mono("f2_3_1", {"a2", "a1", "b3", "b2"});
    b.mono("f2_3_2", {"b2", "b1", "a3", "a2"});
    b.finish();
    b.pres.name = family_display_name(spec);
    return b.pres;
  }
  // Full relation catalogue for s >= 2; minimalized downstream.
  int r = 0;
  auto L = [&]() { return "r_" + num(++r); };
  for (int i = 0; i < s; ++i) {
    b.diff(L(), {e.ar("g2", i), e.ar("g1", i)}, e.beta_path(i));
    b.diff(L(), {e.ar("g2", i), e.ar("g1", i)}, e.alpha_path(i));
    b.mono(L(), {e.ar("g1", i), e.ar("a3", i + 1)});
    b.mono(L(), {e.ar("g1", i), e.ar("b3", i + 1)});
    b.mono(L(), {e.ar("a1", i), e.ar("g2", i + 1)});
    b.mono(L(), {e.ar("b1", i), e.ar("g2", i + 1)});
  }
  for (int i = 0; i + 1 < s; ++i) {
    b.mono(L(), {e.ar("a1", i), e.ar("b3", i + 1)});
    b.mono(L(), {e.ar("b1", i), e.ar("a3", i + 1)});
  }
  b.mono(L(), {e.ar("a1", s - 1), e.ar("a3", 0)});
  b.mono(L(), {e.ar("b1", s - 1), e.ar("b3", 0)});
  for (int i = 0; i < s; ++i) {
    b.mono(L(), {e.ar("g2", i), e.ar("g1", i), e.ar("g2", i + 1)});
    b.mono(L(), {e.ar("g1", i), e.ar("g2", i + 1), e.ar("g1", i + 1)});
  }
  // alpha/beta windows of length 4, crossing branches at the seam
  auto window = [&](const char* x, const char* y, int i) {
    // the doubly-infinite line ... x3 x2 x1 | y3 y2 y1 ... with segment bumps
    std::vector<std::string> names;
    for (int j = 3; j >= 1; --j) names.push_back(e.ar(std::string(x) + num(j), i));
    for (int j = 3; j >= 1; --j) names.push_back(e.ar(std::string(y) + num(j), i + 1));
    return names;  // length 6 window source; slices of 4 are taken below
  };
  for (int i = 0; i < s; ++i) {
    bool seam = i == s - 1;
    auto do_line = [&](const char* x) {
      const char* y = seam ? (std::string(x) == "a" ? "b" : "a") : x;
      std::vector<std::string> line = window(x, y, i);
      for (int start = 0; start + 4 <= 6; ++start) {
        std::vector<std::string> w(line.begin() + start, line.begin() + start + 4);
        b.mono(L(), w);
      }
    };
    do_line("a");
    do_line("b");
  }
  b.finish();
  b.pres.name = family_display_name(spec);
  return minimalized(std::move(b.pres));
}

Presentation make_nonstd(const FamilySpec& spec) {
  int m = spec.m;
  if (m < 2) throw Error(Error::Kind::invalid, "nonstd requires m >= 2");
  if (spec.characteristic != 2)
    throw Error(Error::Kind::invalid, "the non-standard family exists only in characteristic 2");
  Builder b{Field(2)};
  for (int k = 1; k <= m; ++k) b.v("v" + num(k));
  for (int k = 1; k < m; ++k) b.a("a" + num(k), k - 1, k);
  b.a("a" + num(m), m - 1, 0);
  b.a("b", 0, 0);
  std::vector<std::string> alpha;
  for (int k = 1; k <= m; ++k) alpha.push_back("a" + num(k));
  b.diff("f2_1", {"b", "b"}, alpha);
  {
    FreeElement lhs = FreeElement::of_path(b.pres.field, b.path({"a" + num(m), "a1"}));
    FreeElement rhs = FreeElement::of_path(b.pres.field, b.path({"a" + num(m), "b", "a1"}));
    b.rel("f2_2", add(b.pres.field, lhs, scale(b.pres.field, b.pres.field.from_long(-1), rhs)));
  }
  int hi = m == 2 ? 2 : m - 1;
  for (int j = 2; j <= hi; ++j) {
    std::vector<std::string> w;
    for (int k = 0; k <= m; ++k) w.push_back("a" + num((j - 1 + k) % m + 1));
    b.mono("f2_3_" + num(j), w);
  }
  b.finish();
  b.pres.name = family_display_name(spec);
  return b.pres;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string id = lower(colon == std::string::npos ? text : text.substr(0, colon));
  std::map<std::string, int> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw Error(Error::Kind::invalid, "bad family parameter '" + item + "' (want key=value)");
      try {
        kv[lower(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw Error(Error::Kind::invalid, "bad family parameter value in '" + item + "'");
      }
    }
  }
  FamilySpec spec;
  if (id == "nakayama" || id == "n") {
    spec.id = FamilyId::nakayama;
    spec.s = parse_int_field(kv, "s");
    spec.n = parse_int_field(kv, "n");
  } else if (id == "mobius" || id == "m") {
    spec.id = FamilyId::mobius;
    spec.p = parse_int_field(kv, "p");
    spec.s = parse_int_field(kv, "s");
  } else if (id == "d") {
    spec.n = parse_int_field(kv, "n");
    spec.s = parse_int_field(kv, "s");
    spec.t = parse_int_field(kv, "t");
    if (spec.t == 3) {
      if (spec.n != 4) throw Error(Error::Kind::invalid, "t=3 requires n=4");
      spec.id = FamilyId::d4_t3;
    } else {
      spec.id = FamilyId::d_type;
    }
  } else if (id == "d4") {
    spec.id = FamilyId::d4_t3;
    spec.n = 4;
    spec.t = 3;
    spec.s = parse_int_field(kv, "s");
  } else if (id == "d3m-std" || id == "d3m_std" || id == "d3m") {
    spec.id = FamilyId::d3m_std;
    spec.m = parse_int_field(kv, "m");
    spec.s = parse_int_field(kv, "s");
  } else if (id == "e") {
    spec.n = parse_int_field(kv, "n");
    spec.s = parse_int_field(kv, "s");
    spec.t = parse_int_field(kv, "t");
    if (spec.t == 2) {
      if (spec.n != 6) throw Error(Error::Kind::invalid, "t=2 requires n=6");
      spec.id = FamilyId::e6_t2;
    } else if (spec.t == 1) {
      spec.id = FamilyId::e_type;
    } else {
      throw Error(Error::Kind::invalid, "E family requires t in {1,2}");
    }
  } else if (id == "e6") {
    spec.id = FamilyId::e6_t2;
    spec.n = 6;
    spec.t = 2;
    spec.s = parse_int_field(kv, "s");
  } else if (id == "nonstd") {
    spec.id = FamilyId::nonstd;
    spec.m = parse_int_field(kv, "m");
  } else {
    throw Error(Error::Kind::invalid, "unknown family '" + id + "'");
  }
  return spec;
}

std::string family_spec_str(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::nakayama:
      return "nakayama:s=" + num(spec.s) + ",n=" + num(spec.n);
    case FamilyId::mobius:
      return "mobius:p=" + num(spec.p) + ",s=" + num(spec.s);
    case FamilyId::d_type:
      return "D:n=" + num(spec.n) + ",s=" + num(spec.s) + ",t=" + num(spec.t);
    case FamilyId::d4_t3:
      return "D:n=4,s=" + num(spec.s) + ",t=3";
    case FamilyId::d3m_std:
      return "D3m-std:m=" + num(spec.m) + ",s=" + num(spec.s);
    case FamilyId::e_type:
      return "E:n=" + num(spec.n) + ",s=" + num(spec.s) + ",t=1";
    case FamilyId::e6_t2:
      return "E:n=6,s=" + num(spec.s) + ",t=2";
    case FamilyId::nonstd:
      return "nonstd:m=" + num(spec.m);
  }
  return "?";
}

std::string family_display_name(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::nakayama:
      return "N(" + num(spec.s) + "," + num(spec.n) + ")";
    case FamilyId::mobius:
      return "M(" + num(spec.p) + "," + num(spec.s) + ")";
    case FamilyId::d_type:
      return "L(D" + num(spec.n) + "," + num(spec.s) + "," + num(spec.t) + ")";
    case FamilyId::d4_t3:
      return "L(D4," + num(spec.s) + ",3)";
    case FamilyId::d3m_std:
      return "L(D" + num(3 * spec.m) + "," + num(spec.s) + "/3,1)";
    case FamilyId::e_type:
      return "L(E" + num(spec.n) + "," + num(spec.s) + ",1)";
    case FamilyId::e6_t2:
      return "L(E6," + num(spec.s) + ",2)";
    case FamilyId::nonstd:
      return "L(m=" + num(spec.m) + ") non-standard";
  }
  return "?";
}

Presentation make_family(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::nakayama:
      return make_nakayama(spec);
    case FamilyId::mobius:
      return make_mobius(spec);
    case FamilyId::d_type:
      return make_d_type(spec);
    case FamilyId::d4_t3:
      return make_d4_t3(spec);
    case FamilyId::d3m_std:
      return make_d3m(spec);
    case FamilyId::e_type:
      return make_e_type(spec);
    case FamilyId::e6_t2:
      return make_e6_t2(spec);
    case FamilyId::nonstd:
      return make_nonstd(spec);
  }
  throw Error(Error::Kind::internal, "unhandled family");
}

ExpectedDim expected_hh2(const FamilySpec& spec) {
  bool char2 = spec.characteristic == 2;
  switch (spec.id) {
    case FamilyId::nakayama:
      // n+1 = ms + r with 0 <= r < s
      return {true, (spec.n + 1) / spec.s};
    case FamilyId::mobius:
      return {true, spec.p == 1 && spec.s == 1 ? 1 : 0};
    case FamilyId::d_type:
      return {true, spec.t == 2 && spec.s == 1 ? 1 : 0};
    case FamilyId::d4_t3:
      return {true, 0};
    case FamilyId::d3m_std:
      if (spec.s >= 2) return {true, 0};
      if (spec.m == 2) return {true, char2 ? 4 : 2};
      return {true, char2 ? 3 : 1};
    case FamilyId::e_type:
    case FamilyId::e6_t2:
      return {true, 0};
    case FamilyId::nonstd:
      return {true, spec.m == 2 ? 3 : 2};
  }
  return {false, 0};
}

std::vector<FamilySpec> acceptance_grid() {
  std::vector<FamilySpec> grid;
  auto push = [&](FamilySpec s) { grid.push_back(s); };
  auto fam = [](FamilyId id, int n, int s, int m, int p, int t, unsigned long ch) {
    FamilySpec f;
    f.id = id;
    f.n = n;
    f.s = s;
    f.m = m;
    f.p = p;
    f.t = t;
    f.characteristic = ch;
    return f;
  };
  for (int n : {4, 5, 6}) push(fam(FamilyId::d_type, n, 1, 0, 0, 2, 0));
  for (int n : {4, 5})
    for (int s : {1, 2}) push(fam(FamilyId::d_type, n, s, 0, 0, 1, 0));
  for (int s : {1, 2}) push(fam(FamilyId::d4_t3, 4, s, 0, 0, 3, 0));
  for (unsigned long ch : {0ul, 2ul})
    for (int m : {2, 3}) push(fam(FamilyId::d3m_std, 0, 1, m, 0, 0, ch));
  for (int n : {6, 7, 8}) push(fam(FamilyId::e_type, n, 1, 0, 0, 1, 0));
  push(fam(FamilyId::e6_t2, 6, 1, 0, 0, 2, 0));
  for (auto [s, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}})
    push(fam(FamilyId::nakayama, n, s, 0, 0, 1, 0));
  for (auto [p, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}})
    push(fam(FamilyId::mobius, 0, s, 0, p, 2, 0));
  for (int m : {2, 3, 4}) push(fam(FamilyId::nonstd, 0, 0, m, 0, 0, 2));
  return grid;
}

}  // namespace hh2
