#include "hh2/hh2.h"

#include <cstring>
#include <string>

#include "core/pipeline.hpp"

struct hh2_report {
  hh2::RunOutput out;
};

namespace {

thread_local std::string g_last_error;

hh2_status status_of(const hh2::Error& e) {
  using K = hh2::Error::Kind;
  switch (e.kind()) {
    case K::parse:
      return HH2_ERR_PARSE;
    case K::invalid:
      return HH2_ERR_INVALID;
    case K::not_admissible:
      return HH2_ERR_NOT_ADMISSIBLE;
    case K::limit:
      return HH2_ERR_LIMIT;
    case K::consistency:
      return HH2_ERR_CONSISTENCY;
    case K::internal:
      return HH2_ERR_INTERNAL;
  }
  return HH2_ERR_INTERNAL;
}

hh2_status run(hh2::RunConfig cfg, const hh2_options* opt, hh2_report** out) {
  if (!out) {
    g_last_error = "null output handle";
    return HH2_ERR_INVALID;
  }
  *out = nullptr;
  if (opt) {
    cfg.char_override = opt->field_char;
    if (opt->cap > 0) cfg.cap = opt->cap;
    cfg.oracle = opt->run_oracle != 0;
    cfg.vanishing_only = opt->vanishing_only != 0;
    cfg.emit_resolution = opt->emit_resolution != 0;
  }
  try {
    auto* rep = new hh2_report{hh2::run_compute(cfg)};
    *out = rep;
    return HH2_OK;
  } catch (const hh2::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HH2_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

void hh2_options_init(hh2_options* opt) {
  if (!opt) return;
  opt->field_char = -1;
  opt->cap = 0;
  opt->run_oracle = 0;
  opt->vanishing_only = 0;
  opt->emit_resolution = 0;
}

hh2_status hh2_compute_text(const char* dsl_text, const hh2_options* opt, hh2_report** out) {
  if (!dsl_text) {
    g_last_error = "null input text";
    return HH2_ERR_INVALID;
  }
  hh2::RunConfig cfg;
  cfg.source = hh2::RunConfig::Source::text;
  cfg.input = dsl_text;
  return run(std::move(cfg), opt, out);
}

hh2_status hh2_compute_file(const char* path, const hh2_options* opt, hh2_report** out) {
  if (!path) {
    g_last_error = "null input path";
    return HH2_ERR_INVALID;
  }
  hh2::RunConfig cfg;
  cfg.source = hh2::RunConfig::Source::file;
  cfg.input = path;
  return run(std::move(cfg), opt, out);
}

hh2_status hh2_compute_family(const char* family_spec, const hh2_options* opt, hh2_report** out) {
  if (!family_spec) {
    g_last_error = "null family spec";
    return HH2_ERR_INVALID;
  }
  hh2::RunConfig cfg;
  cfg.source = hh2::RunConfig::Source::family;
  cfg.input = family_spec;
  return run(std::move(cfg), opt, out);
}

hh2_status hh2_verify_families(const char* filter, int* all_pass, char** table_text) {
  try {
    hh2::VerifyOutput v = hh2::verify_families(filter ? filter : "");
    if (all_pass) *all_pass = v.all_pass ? 1 : 0;
    if (table_text) {
      *table_text = static_cast<char*>(std::malloc(v.table.size() + 1));
      if (!*table_text) return HH2_ERR_INTERNAL;
      std::memcpy(*table_text, v.table.c_str(), v.table.size() + 1);
    }
    return HH2_OK;
  } catch (const hh2::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HH2_ERR_INTERNAL;
  }
}

int hh2_report_dim(const hh2_report* r) { return r ? r->out.dim : -1; }

int hh2_report_hh(const hh2_report* r, int n) {
  if (!r || n < 0 || n > 2) return -1;
  return n == 0 ? r->out.hh0 : n == 1 ? r->out.hh1 : r->out.hh2;
}

int hh2_report_vanishing_applicable(const hh2_report* r) {
  return r ? r->out.vanishing_applicable : -1;
}

int hh2_report_exactness_ok(const hh2_report* r) { return r ? r->out.exactness_ok : -1; }

int hh2_report_exit_code(const hh2_report* r) { return r ? r->out.exit_code : 2; }

const char* hh2_report_text(const hh2_report* r) { return r ? r->out.text.c_str() : ""; }

const char* hh2_report_json(const hh2_report* r) { return r ? r->out.json.c_str() : ""; }

void hh2_report_free(hh2_report* r) { delete r; }

const char* hh2_last_error(void) { return g_last_error.c_str(); }

void hh2_string_free(char* s) { std::free(s); }

const char* hh2_version(void) { return "1.0.0"; }

}  // extern "C"
