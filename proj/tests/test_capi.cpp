// Exercises the C interface end to end, including determinism of the JSON
// report across repeated runs.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "hh2/hh2.h"

#define REQUIRE(cond)                                                   \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      std::fprintf(stderr, "last error: %s\n", hh2_last_error());       \
      return 1;                                                         \
    }                                                                   \
  } while (0)

int main() {
  hh2_options opt;
  hh2_options_init(&opt);

  // family input with oracle cross-check
  hh2_report* rep = nullptr;
  opt.run_oracle = 1;
  REQUIRE(hh2_compute_family("D:n=5,s=1,t=2", &opt, &rep) == HH2_OK);
  REQUIRE(hh2_report_hh(rep, 2) == 1);
  REQUIRE(hh2_report_dim(rep) == 20);
  REQUIRE(hh2_report_exactness_ok(rep) == 1);
  REQUIRE(hh2_report_vanishing_applicable(rep) == 0);
  REQUIRE(hh2_report_exit_code(rep) == 0);
  std::string json1 = hh2_report_json(rep);
  REQUIRE(json1.find("\"hh2\": 1") != std::string::npos);
  hh2_report_free(rep);

  // determinism: byte-identical JSON across runs
  rep = nullptr;
  REQUIRE(hh2_compute_family("D:n=5,s=1,t=2", &opt, &rep) == HH2_OK);
  REQUIRE(json1 == hh2_report_json(rep));
  hh2_report_free(rep);

  // presentation text input
  const char* dsl =
      "field prime 2\nvertices v1\narrows a: v1 -> v1\nrelations\n  a.a.a\n";
  opt.run_oracle = 0;
  rep = nullptr;
  REQUIRE(hh2_compute_text(dsl, &opt, &rep) == HH2_OK);
  REQUIRE(hh2_report_dim(rep) == 3);
  hh2_report_free(rep);

  // parse errors surface as status codes with a message
  rep = nullptr;
  REQUIRE(hh2_compute_text("field prime 4\n", &opt, &rep) == HH2_ERR_PARSE);
  REQUIRE(std::strlen(hh2_last_error()) > 0);
  REQUIRE(rep == nullptr);

  // missing file
  REQUIRE(hh2_compute_file("/nonexistent.quiver", &opt, &rep) == HH2_ERR_INVALID);

  // vanishing-only mode reports the verdict without cohomology
  hh2_options vopt;
  hh2_options_init(&vopt);
  vopt.vanishing_only = 1;
  rep = nullptr;
  REQUIRE(hh2_compute_family("D:n=4,s=2,t=2", &vopt, &rep) == HH2_OK);
  REQUIRE(hh2_report_vanishing_applicable(rep) == 1);
  REQUIRE(hh2_report_hh(rep, 2) == -1);
  hh2_report_free(rep);

  // bad family parameters
  REQUIRE(hh2_compute_family("D:n=3,s=1,t=1", &vopt, &rep) == HH2_ERR_INVALID);

  std::puts("capi tests passed");
  return 0;
}
