#ifndef HH2_PIPELINE_HPP
#define HH2_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/families.hpp"
#include "core/presentation.hpp"

namespace hh2 {

struct RunConfig {
  enum class Source { file, family, text };
  Source source = Source::file;
  std::string input;        // path, family spec, or DSL text
  long char_override = -1;  // -1 = keep the input's field
  int cap = 64;
  bool oracle = false;
  bool vanishing_only = false;
  bool emit_resolution = false;
};

struct RunOutput {
  int exit_code = 0;  // 0 ok; 3 internal consistency failure
  std::string text;
  std::string json;
  int dim = -1, hh0 = -1, hh1 = -1, hh2 = -1;
  int exactness_ok = -1;  // -1 = not computed
  int vanishing_applicable = -1;
  int oracle_ran = 0;
  int oracle_agree = -1;
};

// Full pipeline: parse/construct, quotient, minimal relations, resolution
// front, cohomology, vanishing check, optional oracle. Throws hh2::Error for
// input and admissibility problems; consistency failures are reported through
// exit_code = 3 with the report still rendered.
RunOutput run_compute(const RunConfig& cfg);

struct VerifyRow {
  FamilySpec spec;
  int expected = 0;
  int got = -1;
  bool pass = false;
  std::string note;
};

struct VerifyOutput {
  bool all_pass = false;
  std::string table;
  std::vector<VerifyRow> rows;
};

// Regression over the family grid; `filter` is a case-insensitive substring
// match against the family spec string.
VerifyOutput verify_families(const std::string& filter = "", int cap = 64);
VerifyOutput verify_grid(const std::vector<FamilySpec>& grid,
                         const std::vector<int>& expected_override = {}, int cap = 64);

}  // namespace hh2

#endif
