#include "core/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/cohomology.hpp"
#include "core/oracle.hpp"
#include "core/resolution.hpp"
#include "core/vanishing.hpp"

namespace hh2 {

namespace {

using nlohmann::json;

Presentation with_field(const Presentation& p, unsigned long characteristic) {
  if (p.field.characteristic() == characteristic) return p;
  Presentation out = p;
  out.field = Field(characteristic);
  out.relations.clear();
  for (const auto& r : p.relations) {
    std::vector<std::pair<Scalar, Path>> terms;
    for (const auto& [c, q] : r.terms()) terms.emplace_back(out.field.from_mpq(c.v), q);
    FreeElement e = FreeElement::make(out.field, std::move(terms));
    if (e.is_zero())
      throw Error(Error::Kind::invalid,
                  "relation vanishes after moving to characteristic " +
                      std::to_string(characteristic));
    out.relations.push_back(std::move(e));
  }
  return out;
}

Presentation load_input(const RunConfig& cfg, std::optional<FamilySpec>& family_out) {
  Presentation pres;
  if (cfg.source == RunConfig::Source::family) {
    FamilySpec spec = parse_family_spec(cfg.input);
    spec.characteristic = cfg.char_override >= 0
                              ? static_cast<unsigned long>(cfg.char_override)
                              : (spec.id == FamilyId::nonstd ? 2ul : 0ul);
    family_out = spec;
    return make_family(spec);
  }
  std::string text;
  if (cfg.source == RunConfig::Source::file) {
    std::ifstream in(cfg.input);
    if (!in) throw Error(Error::Kind::invalid, "cannot open input file '" + cfg.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = cfg.input;
  }
  pres = parse_presentation(text);
  if (cfg.char_override >= 0)
    pres = with_field(pres, static_cast<unsigned long>(cfg.char_override));
  return pres;
}

json params_json(const FamilySpec& spec) {
  json j = json::object();
  switch (spec.id) {
    case FamilyId::nakayama:
      j["s"] = spec.s;
      j["n"] = spec.n;
      break;
    case FamilyId::mobius:
      j["p"] = spec.p;
      j["s"] = spec.s;
      break;
    case FamilyId::d_type:
    case FamilyId::d4_t3:
      j["n"] = spec.n;
      j["s"] = spec.s;
      j["t"] = spec.id == FamilyId::d4_t3 ? 3 : spec.t;
      break;
    case FamilyId::d3m_std:
      j["m"] = spec.m;
      j["s"] = spec.s;
      break;
    case FamilyId::e_type:
    case FamilyId::e6_t2:
      j["n"] = spec.n;
      j["s"] = spec.s;
      j["t"] = spec.id == FamilyId::e6_t2 ? 2 : 1;
      break;
    case FamilyId::nonstd:
      j["m"] = spec.m;
      break;
  }
  return j;
}

std::string scalar_str(const Scalar& c) { return c.str(); }

json alg_element_json(const QuotientAlgebra& A, const AlgElement& x) {
  json arr = json::array();
  for (const auto& [nt, c] : x.terms)
    arr.push_back(json{{"coeff", scalar_str(c)}, {"path", A.nontips()[nt].str(A.quiver())}});
  return arr;
}

}  // namespace

RunOutput run_compute(const RunConfig& cfg) {
  RunOutput out;
  std::optional<FamilySpec> family;
  Presentation pres = load_input(cfg, family);

  std::vector<Finding> findings = validate(pres);

  QuotientAlgebra raw = build_quotient(pres, cfg.cap, /*track=*/false);
  RelationSet f2 = minimalize_relations(raw, pres.relations, pres.relation_labels);

  Presentation pres_min = pres;
  pres_min.relations = f2.elements;
  pres_min.relation_labels = f2.labels;
  QuotientAlgebra A = build_quotient(pres_min, cfg.cap, /*track=*/true);
  if (A.nilpotency_index() != raw.nilpotency_index() ||
      !(A.nontips() == raw.nontips()))
    throw Error(Error::Kind::internal,
                "minimal relations generate a different ideal than the input relations");

  VanishingVerdict verdict = vanishing_check(A, f2);
  out.dim = A.dimension();
  out.vanishing_applicable = verdict.applicable ? 1 : 0;

  std::ostringstream text;
  json j;
  j["schema_version"] = "1";
  {
    json alg;
    alg["name"] = pres.name.empty() ? std::string("(unnamed)") : pres.name;
    alg["family"] = family ? json(family_spec_str(*family)) : json(nullptr);
    alg["params"] = family ? params_json(*family) : json(nullptr);
    alg["char"] = A.field().characteristic();
    alg["dim"] = A.dimension();
    alg["nilpotency_index"] = A.nilpotency_index();
    json pairs = json::array();
    for (int v = 0; v < A.quiver().vertex_count(); ++v)
      for (int w = 0; w < A.quiver().vertex_count(); ++w) {
        int c = static_cast<int>(A.hom_basis(v, w).size());
        if (c > 0)
          pairs.push_back(json{{"from", A.quiver().vertex_name(v)},
                               {"to", A.quiver().vertex_name(w)},
                               {"count", c}});
      }
    alg["nontip_count_by_pair"] = pairs;
    j["algebra"] = alg;
  }

  text << "algebra " << (pres.name.empty() ? "(unnamed)" : pres.name);
  if (family) text << "  [" << family_spec_str(*family) << "]";
  text << "\n  field char " << A.field().characteristic() << ", dim " << A.dimension()
       << ", J^" << A.nilpotency_index() << " in I, " << f2.size() << " minimal relations\n";
  for (const auto& f : findings) {
    const char* kind = f.kind == Finding::Kind::duplicate_relation   ? "duplicate"
                       : f.kind == Finding::Kind::reducible_relation ? "reducible"
                                                                     : "order";
    text << "  note (" << kind << "): " << f.detail << "\n";
  }

  {
    json van;
    van["applicable"] = verdict.applicable;
    if (verdict.applicable) {
      json ws = json::array();
      for (const auto& w : verdict.witnesses)
        ws.push_back(json{{"relation", f2.labels[w.rel]},
                          {"p", w.p.str(A.quiver())},
                          {"q", w.q.str(A.quiver())},
                          {"arrow", A.quiver().arrow(w.arrow).name}});
      van["witnesses"] = ws;
      json g2 = json::array();
      for (const auto& p : verdict.g2) g2.push_back(p.str(A.quiver()));
      van["g2"] = g2;
    } else {
      van["failure_reason"] = verdict.failure_reason;
    }
    j["vanishing"] = van;

    text << "vanishing criterion: ";
    if (verdict.applicable) {
      text << "applicable => HH^2 = 0\n";
      for (const auto& w : verdict.witnesses)
        text << "  " << f2.labels[w.rel] << ": p = " << w.p.str(A.quiver())
             << ", q = " << w.q.str(A.quiver()) << ", arrow "
             << A.quiver().arrow(w.arrow).name << "\n";
    } else {
      text << "not applicable (" << verdict.failure_reason << ")\n";
    }
  }

  bool consistency_failed = false;
  if (cfg.vanishing_only) {
    j["resolution"] = nullptr;
    j["cohomology"] = nullptr;
    j["oracle"] = json{{"ran", false}};
  } else {
    ResolutionFront front = build_front(A, f2);
    ExactnessReport exact = check_exactness(A, front);
    out.exactness_ok = exact.ok ? 1 : 0;
    if (!exact.ok) consistency_failed = true;

    CochainData data = cochain_data(A, front);
    CohomologyReport rep = hh_report(A, front, data);
    out.hh0 = rep.hh0;
    out.hh1 = rep.hh1;
    out.hh2 = rep.hh2;
    if (verdict.applicable && rep.hh2 != 0) consistency_failed = true;

    {
      json res;
      res["f2_count"] = f2.size();
      res["f3_count"] = static_cast<int>(front.f3.size());
      res["exactness_ok"] = exact.ok;
      json rt;
      rt["dim_lambda"] = exact.dim_lambda;
      for (int d = 0; d < 4; ++d) rt["dim_q" + std::to_string(d)] = exact.dim_q[d];
      rt["rank_a1"] = exact.rank_a1;
      rt["rank_a2"] = exact.rank_a2;
      rt["rank_a3"] = exact.rank_a3;
      res["rank_table"] = rt;
      if (cfg.emit_resolution) {
        json f2j = json::array();
        for (int i = 0; i < f2.size(); ++i)
          f2j.push_back(json{{"label", f2.labels[i]},
                             {"element", f2.elements[i].str(A.quiver())}});
        res["f2"] = f2j;
        json f3j = json::array();
        for (const auto& y : front.f3) {
          json rj = json::array();
          for (const auto& r : y.right)
            rj.push_back(json{{"relation", f2.labels[r.rel]},
                              {"cofactor", r.cofactor.str(A.quiver())}});
          json lj = json::array();
          for (const auto& l : y.left)
            lj.push_back(json{{"coeff", scalar_str(l.c)},
                              {"q", l.q.str(A.quiver())},
                              {"relation", f2.labels[l.rel]},
                              {"r", l.r.str(A.quiver())}});
          f3j.push_back(json{{"label", y.label},
                             {"y", y.y.str(A.quiver())},
                             {"right", rj},
                             {"left", lj}});
        }
        res["f3"] = f3j;
      }
      j["resolution"] = res;

      text << "resolution front: " << f2.size() << " f2, " << front.f3.size() << " f3; "
           << "dims Q0..Q3 = " << exact.dim_q[0] << ", " << exact.dim_q[1] << ", "
           << exact.dim_q[2] << ", " << exact.dim_q[3] << "\n";
      text << "exactness: " << (exact.ok ? "ok" : "FAILED") << " (rank A1 = " << exact.rank_a1
           << ", A2 = " << exact.rank_a2 << ", A3 = " << exact.rank_a3 << ")\n";
    }

    {
      json coh;
      coh["hh0"] = rep.hh0;
      coh["hh1"] = rep.hh1;
      coh["hh2"] = rep.hh2;
      for (int d = 0; d < 4; ++d) coh["dim_hom_q" + std::to_string(d)] = rep.dim_hom[d];
      coh["rank_d1"] = rep.rank_d1;
      coh["rank_d2"] = rep.rank_d2;
      coh["rank_d3"] = rep.rank_d3;
      json basis = json::array();
      for (const auto& c : rep.basis) {
        json one = json::array();
        for (const auto& [rel, val] : cocycle_values(A, data, c))
          one.push_back(json{{"relation", f2.labels[rel]},
                             {"value_paths", alg_element_json(A, val)}});
        basis.push_back(one);
      }
      coh["basis_cocycles"] = basis;
      j["cohomology"] = coh;

      text << "HH^0 = " << rep.hh0 << ", HH^1 = " << rep.hh1 << ", HH^2 = " << rep.hh2
           << "   (dim Hom(Q2,L) = " << rep.dim_hom[2] << ", rank d2 = " << rep.rank_d2
           << ", dim Ker d3 = " << rep.dim_hom[2] - rep.rank_d3 << ")\n";
      if (!rep.basis.empty()) {
        text << "HH^2 basis cocycles:\n";
        int k = 0;
        for (const auto& c : rep.basis) {
          text << "  [" << ++k << "]";
          bool first = true;
          for (const auto& [rel, val] : cocycle_values(A, data, c)) {
            const auto [o, t] = std::pair(f2.origin(rel), f2.terminus(rel));
            text << (first ? " " : " ; ") << "e_" << A.quiver().vertex_name(o) << " ⊗_{"
                 << f2.labels[rel] << "} e_" << A.quiver().vertex_name(t) << " ↦ "
                 << A.element_str(val);
            first = false;
          }
          text << "\n";
        }
      }
    }

    if (cfg.oracle) {
      try {
        BarDims bar = bar_hh(A);
        bool agree = bar.hh0 == rep.hh0 && bar.hh1 == rep.hh1 && bar.hh2 == rep.hh2;
        out.oracle_ran = 1;
        out.oracle_agree = agree ? 1 : 0;
        if (!agree) consistency_failed = true;
        j["oracle"] = json{{"ran", true},
                           {"hh0", bar.hh0},
                           {"hh1", bar.hh1},
                           {"hh2", bar.hh2},
                           {"agree", agree}};
        text << "oracle (reduced bar complex): HH = (" << bar.hh0 << ", " << bar.hh1 << ", "
             << bar.hh2 << ") " << (agree ? "agrees" : "DISAGREES") << "\n";
      } catch (const Error& e) {
        if (e.kind() != Error::Kind::limit) throw;
        j["oracle"] = json{{"ran", false}, {"reason", e.what()}};
        text << "oracle: skipped (" << e.what() << ")\n";
      }
    } else {
      j["oracle"] = json{{"ran", false}};
    }
  }

  // Deterministic output: repeated runs must be byte-identical, so the JSON
  // carries no wall-clock timing.
  j["timing_ms"] = 0;

  out.exit_code = consistency_failed ? 3 : 0;
  if (consistency_failed) text << "CONSISTENCY FAILURE detected (see above)\n";
  out.text = text.str();
  out.json = j.dump(2) + "\n";
  return out;
}

VerifyOutput verify_grid(const std::vector<FamilySpec>& grid,
                         const std::vector<int>& expected_override, int cap) {
  VerifyOutput out;
  out.all_pass = true;
  std::ostringstream table;
  table << "family                         char  expected  got  result\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    VerifyRow row;
    row.spec = grid[i];
    row.expected = i < expected_override.size() ? expected_override[i]
                                                : expected_hh2(grid[i]).value;
    RunConfig cfg;
    cfg.source = RunConfig::Source::family;
    cfg.input = family_spec_str(grid[i]);
    cfg.char_override = static_cast<long>(grid[i].characteristic);
    cfg.cap = cap;
    try {
      RunOutput r = run_compute(cfg);
      row.got = r.hh2;
      row.pass = r.exit_code == 0 && r.hh2 == row.expected;
      if (r.exit_code != 0) row.note = "consistency failure";
    } catch (const Error& e) {
      row.pass = false;
      row.note = e.what();
    }
    out.all_pass = out.all_pass && row.pass;
    std::string name = family_spec_str(row.spec);
    table << name << std::string(name.size() < 30 ? 30 - name.size() : 1, ' ')
          << " " << row.spec.characteristic << "     " << row.expected << "         ";
    if (row.got >= 0)
      table << row.got;
    else
      table << "-";
    table << "    " << (row.pass ? "pass" : "FAIL");
    if (!row.note.empty()) table << "  (" << row.note << ")";
    table << "\n";
    out.rows.push_back(std::move(row));
  }
  table << (out.all_pass ? "all pass\n" : "FAILURES present\n");
  out.table = table.str();
  return out;
}

VerifyOutput verify_families(const std::string& filter, int cap) {
  std::vector<FamilySpec> grid;
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  for (const auto& spec : acceptance_grid()) {
    std::string name = lower(family_spec_str(spec));
    if (filter.empty() || name.find(lower(filter)) != std::string::npos) grid.push_back(spec);
  }
  return verify_grid(grid, {}, cap);
}

}  // namespace hh2
