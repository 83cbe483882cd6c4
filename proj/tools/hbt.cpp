// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / tight, 1 invalid input or other failure,
// 2 overtwisted, 3 configuration limit exceeded, 64 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hbt/hbt.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kOvertwisted = 2;
constexpr int kLimit = 3;
constexpr int kUsage = 64;

struct CString {
  char* p = nullptr;
  ~CString() { hbt_string_free(p); }
  const char* get() const { return p ? p : ""; }
};

using Presentation = std::unique_ptr<hbt_presentation, decltype(&hbt_presentation_free)>;
using Report = std::unique_ptr<hbt_report, decltype(&hbt_report_free)>;

int fail(hbt_status s) {
  std::cerr << "error: " << hbt_last_error() << "\n";
  return s == HBT_ERR_RESOURCE_LIMIT ? kLimit : kFailure;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Loads a document; returns an exit code on failure, -1 on success.
int load(const std::string& path, Presentation& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kFailure;
  }
  hbt_presentation* p = nullptr;
  if (hbt_status s = hbt_presentation_parse(text.c_str(), &p); s != HBT_OK) return fail(s);
  out.reset(p);
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify tight contact structures on handlebodies by chord-diagram state graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  hbt_options opts{1'000'000, 1};
  app.add_option("--limit", opts.config_limit, "Maximum number of configurations to explore")
      ->capture_default_str();
  app.add_option("--workers", opts.workers, "Worker threads for exploration")->capture_default_str();

  std::string file;
  std::string out_path;
  int n = 0;
  std::string slope;
  bool with_template = false;
  bool no_faces = false;

  auto* validate = app.add_subcommand("validate", "Check that a presentation is well formed");
  validate->add_option("file", file, "Presentation document")->required();
  auto* classify = app.add_subcommand("classify", "Print the classification report");
  classify->add_option("file", file, "Presentation document")->required();
  auto* check = app.add_subcommand("check", "Decide tightness of the document's configuration");
  check->add_option("file", file, "Presentation document with config lines")->required();
  auto* graph = app.add_subcommand("graph", "Write the transition graph in DOT form");
  graph->add_option("file", file, "Presentation document")->required();
  graph->add_option("--out", out_path, "Output path ('-' for standard output)")->required();
  auto* enumerate = app.add_subcommand("enumerate", "List all chord diagrams with n chords");
  enumerate->add_option("--n", n, "Number of chords")->required()->check(CLI::Range(0, 12));
  auto* oracle = app.add_subcommand("oracle", "Closed-form counts");
  oracle->require_subcommand(1);
  auto* torus = oracle->add_subcommand("solid-torus", "Tight structures on a solid torus of slope -p/q");
  torus->add_option("--slope", slope, "Boundary slope, e.g. -5/2")->required();
  torus->add_flag("--template", with_template, "Print the presentation document instead");
  torus->add_flag("--no-faces", no_faces, "Omit the face certificate from --template output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*validate) {
    Presentation p(nullptr, hbt_presentation_free);
    if (int rc = load(file, p); rc >= 0) return rc;
    CString text;
    if (hbt_status s = hbt_validate(p.get(), &text.p); s != HBT_OK) return fail(s);
    std::cout << text.get();
    return kOk;
  }
  if (*classify || *graph) {
    Presentation p(nullptr, hbt_presentation_free);
    if (int rc = load(file, p); rc >= 0) return rc;
    hbt_report* raw = nullptr;
    if (hbt_status s = hbt_classify(p.get(), &opts, &raw); s != HBT_OK) return fail(s);
    Report r(raw, hbt_report_free);
    CString text;
    const hbt_status s = *classify ? hbt_report_text(r.get(), &text.p) : hbt_report_dot(r.get(), &text.p);
    if (s != HBT_OK) return fail(s);
    if (*classify || out_path == "-") {
      std::cout << text.get();
      return kOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text.get();
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kFailure;
    }
    return kOk;
  }
  if (*check) {
    Presentation p(nullptr, hbt_presentation_free);
    if (int rc = load(file, p); rc >= 0) return rc;
    if (!hbt_presentation_has_config(p.get())) {
      std::cerr << "error: " << file << " has no 'config' lines\n";
      return kUsage;
    }
    int tight = 0;
    CString text;
    if (hbt_status s = hbt_check(p.get(), &opts, &tight, &text.p); s != HBT_OK) return fail(s);
    std::cout << text.get();
    return tight ? kOk : kOvertwisted;
  }
  if (*enumerate) {
    CString text;
    if (hbt_status s = hbt_enumerate_text(n, &text.p); s != HBT_OK) return fail(s);
    std::cout << text.get();
    return kOk;
  }
  if (*torus) {
    CString text;
    hbt_status s;
    if (with_template) {
      s = hbt_solid_torus_template(slope.c_str(), no_faces ? 0 : 1, &text.p);
      if (s == HBT_OK) std::cout << text.get();
    } else {
      uint64_t count = 0;
      s = hbt_oracle_solid_torus(slope.c_str(), &count, &text.p);
      if (s == HBT_OK) std::cout << count << "\ncontinued fraction " << text.get() << "\n";
    }
    if (s == HBT_ERR_BAD_SLOPE) {
      std::cerr << "error: " << hbt_last_error() << "\n";
      return kUsage;
    }
    return s == HBT_OK ? kOk : fail(s);
  }
  return kUsage;
}
