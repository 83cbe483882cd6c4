#pragma once

// Text formats: the presentation document, classification reports, the
// graph export and small listings used by the command-line tool.

#include <optional>
#include <string>
#include <string_view>

#include "hbt/state_graph.hpp"
#include "hbt/surface.hpp"

namespace hbt {

struct PresentationDocument {
  HandlebodyPresentation presentation;
  std::optional<Configuration> config;
  friend bool operator==(const PresentationDocument&, const PresentationDocument&) = default;
};

// Parses and validates. Throws Error{SyntaxError} or Error{SemanticError};
// the locator names the offending line.
PresentationDocument parse_presentation(std::string_view text);

// Canonical text form; parse_presentation(serialize(d)) == d.
std::string serialize(const PresentationDocument& doc);

// "fnv1a64:<16 hex digits>" over the canonical form.
std::string input_digest(const PresentationDocument& doc);

std::string format_validation(const ValidationReport& report);
std::string format_report(const ClassificationReport& report, const TransitionGraph& graph,
                          const std::string& digest);
std::string format_graph_dot(const TransitionGraph& graph);
std::string format_verdict(const TightnessVerdict& verdict, const Configuration& c,
                           const SurfaceModel& model);
std::string format_diagrams(int n);

// Parses "-p/q" or "-p". Throws Error{BadSlope}.
std::pair<std::int64_t, std::int64_t> parse_slope(std::string_view text);

}  // namespace hbt
