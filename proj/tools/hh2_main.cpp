// hh2 command line: compute | vanishing | verify-families.
// Talks to the engine exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "hh2/hh2.h"

namespace {

const char* usage_text =
    "usage:\n"
    "  hh2 compute  [--family SPEC | FILE | --stdin] [--char 0|p] [--oracle]\n"
    "               [--json PATH] [--cap N] [--emit-resolution]\n"
    "  hh2 vanishing [--family SPEC | FILE | --stdin] [--char 0|p] [--json PATH] [--cap N]\n"
    "  hh2 verify-families [--grid FILTER]\n"
    "\n"
    "Family specs: \"nakayama:s=1,n=2\", \"mobius:p=1,s=1\", \"D:n=5,s=1,t=2\",\n"
    "\"D:n=4,s=2,t=3\", \"D3m-std:m=2,s=1\", \"E:n=6,s=1,t=1\", \"E:n=6,s=1,t=2\",\n"
    "\"nonstd:m=3\" (characteristic forced to 2 unless --char says otherwise).\n"
    "\n"
    "Exit codes: 0 success, 2 invalid input or non-admissible ideal,\n"
    "3 internal consistency failure (exactness or oracle disagreement).\n";

int exit_code_for(hh2_status st) {
  switch (st) {
    case HH2_OK:
      return 0;
    case HH2_ERR_CONSISTENCY:
    case HH2_ERR_INTERNAL:
      return 3;
    default:
      return 2;
  }
}

std::string read_stdin() {
  std::string data;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, stdin)) > 0) data.append(buf, n);
  return data;
}

bool write_file(const std::string& path, const char* content) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  std::fwrite(content, 1, std::strlen(content), f);
  std::fclose(f);
  return true;
}

int run_compute(int argc, char** argv, bool vanishing_only) {
  hh2_options opt;
  hh2_options_init(&opt);
  opt.vanishing_only = vanishing_only ? 1 : 0;

  std::string family, file, json_path;
  bool use_stdin = false;
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    auto need_value = [&](const char* flag) -> const char* {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "hh2: %s needs a value\n", flag);
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--family") {
      family = need_value("--family");
    } else if (a == "--stdin") {
      use_stdin = true;
    } else if (a == "--char") {
      opt.field_char = std::atoi(need_value("--char"));
    } else if (a == "--cap") {
      opt.cap = std::atoi(need_value("--cap"));
    } else if (a == "--json") {
      json_path = need_value("--json");
    } else if (a == "--oracle") {
      opt.run_oracle = 1;
    } else if (a == "--emit-resolution") {
      opt.emit_resolution = 1;
    } else if (a == "--vanishing-only") {
      opt.vanishing_only = 1;
    } else if (!a.empty() && a[0] == '-') {
      std::fprintf(stderr, "hh2: unknown option '%s'\n%s", a.c_str(), usage_text);
      return 2;
    } else {
      file = a;
    }
  }
  int sources = (family.empty() ? 0 : 1) + (file.empty() ? 0 : 1) + (use_stdin ? 1 : 0);
  if (sources != 1) {
    std::fprintf(stderr, "hh2: exactly one input source expected (--family, FILE, or --stdin)\n");
    return 2;
  }

  hh2_report* rep = nullptr;
  hh2_status st;
  if (!family.empty()) {
    st = hh2_compute_family(family.c_str(), &opt, &rep);
  } else if (use_stdin) {
    std::string text = read_stdin();
    st = hh2_compute_text(text.c_str(), &opt, &rep);
  } else {
    st = hh2_compute_file(file.c_str(), &opt, &rep);
  }
  if (st != HH2_OK) {
    std::fprintf(stderr, "hh2: %s\n", hh2_last_error());
    return exit_code_for(st);
  }
  std::fputs(hh2_report_text(rep), stdout);
  int code = hh2_report_exit_code(rep);
  if (!json_path.empty()) {
    if (json_path == "-") {
      std::fputs(hh2_report_json(rep), stdout);
    } else if (!write_file(json_path, hh2_report_json(rep))) {
      std::fprintf(stderr, "hh2: cannot write '%s'\n", json_path.c_str());
      hh2_report_free(rep);
      return 2;
    }
  }
  hh2_report_free(rep);
  return code;
}

int run_verify(int argc, char** argv) {
  std::string filter;
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--grid" && i + 1 < argc) {
      filter = argv[++i];
    } else {
      std::fprintf(stderr, "hh2: unknown option '%s'\n%s", a.c_str(), usage_text);
      return 2;
    }
  }
  int all_pass = 0;
  char* table = nullptr;
  hh2_status st = hh2_verify_families(filter.empty() ? nullptr : filter.c_str(), &all_pass, &table);
  if (st != HH2_OK) {
    std::fprintf(stderr, "hh2: %s\n", hh2_last_error());
    return exit_code_for(st);
  }
  std::fputs(table, stdout);
  hh2_string_free(table);
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fputs(usage_text, stderr);
    return 2;
  }
  std::string cmd = argv[1];
  if (cmd == "compute") return run_compute(argc - 2, argv + 2, false);
  if (cmd == "vanishing") return run_compute(argc - 2, argv + 2, true);
  if (cmd == "verify-families") return run_verify(argc - 2, argv + 2);
  if (cmd == "--help" || cmd == "-h" || cmd == "help") {
    std::fputs(usage_text, stdout);
    return 0;
  }
  std::fprintf(stderr, "hh2: unknown command '%s'\n%s", cmd.c_str(), usage_text);
  return 2;
}
