#include "hbt/hbt.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "hbt/error.hpp"
#include "hbt/oracles.hpp"
#include "hbt/presentation_io.hpp"
#include "hbt/state_graph.hpp"

struct hbt_presentation {
  hbt::PresentationDocument doc;
  hbt::SurfaceModel model;
};

struct hbt_report {
  hbt::TransitionGraph graph;
  hbt::ClassificationReport report;
  std::string digest;
};

namespace {

thread_local std::string last_error;
thread_local hbt_status last_cause = HBT_OK;

hbt_status status_of(hbt::ErrorCode code) {
  using hbt::ErrorCode;
  switch (code) {
    case ErrorCode::CrossingChords: return HBT_ERR_CROSSING_CHORDS;
    case ErrorCode::NotInvolution: return HBT_ERR_NOT_INVOLUTION;
    case ErrorCode::ArcNotInDiagram: return HBT_ERR_ARC_NOT_IN_DIAGRAM;
    case ErrorCode::DisallowedClosedComponent: return HBT_ERR_DISALLOWED_CLOSED_COMPONENT;
    case ErrorCode::DegreeViolation: return HBT_ERR_DEGREE_VIOLATION;
    case ErrorCode::BadIdentification: return HBT_ERR_BAD_IDENTIFICATION;
    case ErrorCode::EmptyIntersection: return HBT_ERR_EMPTY_INTERSECTION;
    case ErrorCode::UntightBoundary: return HBT_ERR_UNTIGHT_BOUNDARY;
    case ErrorCode::BadCertificate: return HBT_ERR_BAD_CERTIFICATE;
    case ErrorCode::ResourceLimit: return HBT_ERR_RESOURCE_LIMIT;
    case ErrorCode::BadSlope: return HBT_ERR_BAD_SLOPE;
    case ErrorCode::SyntaxError: return HBT_ERR_SYNTAX;
    case ErrorCode::SemanticError: return HBT_ERR_SEMANTIC;
    case ErrorCode::InvalidArgument: return HBT_ERR_INVALID_ARGUMENT;
  }
  return HBT_ERR_INTERNAL;
}

template <class F>
hbt_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    last_cause = HBT_OK;
    return HBT_OK;
  } catch (const hbt::Error& e) {
    last_error = e.what();
    last_cause = status_of(e.cause());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  last_cause = HBT_ERR_INTERNAL;
  return HBT_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw hbt::Error(hbt::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

hbt::ExploreOptions options_of(const hbt_options* o) {
  hbt::ExploreOptions out;
  if (o != nullptr) {
    if (o->config_limit != 0) out.config_limit = o->config_limit;
    out.workers = o->workers == 0 ? 1 : o->workers;
  }
  return out;
}

hbt::oracles::NegativeSlope slope_of(const char* text) {
  require(text, "slope");
  const auto [p, q] = hbt::parse_slope(text);
  return hbt::oracles::NegativeSlope(p, q);
}

}  // namespace

extern "C" {

const char* hbt_version(void) { return "1.0.0"; }

const char* hbt_last_error(void) { return last_error.c_str(); }

hbt_status hbt_last_error_cause(void) { return last_cause; }

const char* hbt_status_name(hbt_status status) {
  switch (status) {
    case HBT_OK: return "Ok";
    case HBT_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status < HBT_OK || status > HBT_ERR_INTERNAL) return "Unknown";
  return hbt::to_string(static_cast<hbt::ErrorCode>(status - 1)).data();
}

void hbt_string_free(char* s) { std::free(s); }

hbt_status hbt_presentation_parse(const char* text, hbt_presentation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    hbt::PresentationDocument doc = hbt::parse_presentation(text);
    hbt::SurfaceModel model(doc.presentation);
    if (doc.config) model.check(*doc.config);
    *out = new hbt_presentation{std::move(doc), std::move(model)};
  });
}

void hbt_presentation_free(hbt_presentation* p) { delete p; }

hbt_status hbt_presentation_serialize(const hbt_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    *out = dup(hbt::serialize(p->doc));
  });
}

hbt_status hbt_presentation_digest(const hbt_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    *out = dup(hbt::input_digest(p->doc));
  });
}

int hbt_presentation_genus(const hbt_presentation* p) { return p ? p->model.genus() : -1; }

int hbt_presentation_has_config(const hbt_presentation* p) { return p && p->doc.config ? 1 : 0; }

hbt_status hbt_validate(const hbt_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    *out = dup(hbt::format_validation(p->model.validation()));
  });
}

hbt_status hbt_classify(const hbt_presentation* p, const hbt_options* opts, hbt_report** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    *out = nullptr;
    hbt::TransitionGraph g = hbt::explore(p->model, options_of(opts));
    hbt::ClassificationReport r = hbt::classify(g, p->model);
    *out = new hbt_report{std::move(g), std::move(r), hbt::input_digest(p->doc)};
  });
}

void hbt_report_free(hbt_report* r) { delete r; }

uint64_t hbt_report_configurations(const hbt_report* r) { return r ? r->report.total_configurations : 0; }

int hbt_report_potentially_allowable(const hbt_report* r) {
  return r ? r->report.potentially_allowable_count : -1;
}

int hbt_report_transitions(const hbt_report* r) { return r ? r->report.transition_count : -1; }

int hbt_report_components(const hbt_report* r) { return r ? r->report.component_count : -1; }

int hbt_report_tight(const hbt_report* r) { return r ? r->report.tight_count : -1; }

int hbt_report_component_size(const hbt_report* r, int component) {
  if (!r || component < 0 || component >= r->report.component_count) return -1;
  return r->report.components[static_cast<std::size_t>(component)].size;
}

int hbt_report_component_allowable(const hbt_report* r, int component) {
  if (!r || component < 0 || component >= r->report.component_count) return -1;
  return r->report.components[static_cast<std::size_t>(component)].allowable ? 1 : 0;
}

hbt_status hbt_report_text(const hbt_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(hbt::format_report(r->report, r->graph, r->digest));
  });
}

hbt_status hbt_report_dot(const hbt_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(hbt::format_graph_dot(r->graph));
  });
}

hbt_status hbt_check(const hbt_presentation* p, const hbt_options* opts, int* tight, char** text) {
  return guarded([&] {
    require(p, "presentation");
    require(tight, "tight");
    if (!p->doc.config) {
      throw hbt::Error(hbt::ErrorCode::InvalidArgument, "the document has no 'config' lines", "config");
    }
    const hbt::TightnessVerdict v = hbt::is_tight(p->model, *p->doc.config, options_of(opts));
    *tight = v.tight ? 1 : 0;
    if (text != nullptr) *text = dup(hbt::format_verdict(v, *p->doc.config, p->model));
  });
}

hbt_status hbt_enumerate_text(int n, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0 || n > 12) throw hbt::Error(hbt::ErrorCode::InvalidArgument, "n must lie in 0..12");
    *out = dup(hbt::format_diagrams(n));
  });
}

hbt_status hbt_oracle_solid_torus(const char* slope, uint64_t* count, char** cf_text) {
  return guarded([&] {
    require(count, "count");
    const hbt::oracles::NegativeSlope s = slope_of(slope);
    *count = hbt::oracles::solid_torus_count(s);
    if (cf_text != nullptr) {
      std::string cf = "[";
      for (std::size_t i = 0; i < s.continued_fraction().size(); ++i) {
        if (i > 0) cf += ", ";
        cf += std::to_string(s.continued_fraction()[i]);
      }
      *cf_text = dup(cf + "]");
    }
  });
}

hbt_status hbt_solid_torus_template(const char* slope, int with_faces, char** out) {
  return guarded([&] {
    require(out, "out");
    const hbt::oracles::NegativeSlope s = slope_of(slope);
    if (s.p() > 1000) throw hbt::Error(hbt::ErrorCode::InvalidArgument, "p is too large for a template");
    hbt::PresentationDocument doc{hbt::oracles::solid_torus_presentation(s, with_faces != 0), std::nullopt};
    *out = dup(hbt::serialize(doc));
  });
}

}  // extern "C"
