#pragma once

#include <string>
#include <string_view>

#include "kings/constructions.hpp"
#include "kings/continuity.hpp"
#include "kings/experiments.hpp"
#include "kings/kings.hpp"
#include "kings/sampled_space.hpp"
#include "kings/weak_selection.hpp"

// Interchange formats. Every writer is deterministic: same value, same
// bytes. Every reader throws InputError with a field path on bad input.
namespace kings::io {

inline constexpr int kFormatVersion = 1;

// Tournament document:
//   {"format_version": 1, "players": ["a", "b", ...],
//    "choices": [{"i": 0, "j": 1, "pick": 1}, ...]}
// one record per pair i < j, in lexicographic pair order on output.
std::string tournament_to_json(const WeakSelection& sel);
WeakSelection tournament_from_json(std::string_view text);

// Sampled space: {"format_version": 1, "points": [[x, y], ...],
//                 "parameters": [...], "labels": [...]}
// parameters and labels are optional.
std::string space_to_json(const SampledSpace& space);
SampledSpace space_from_json(std::string_view text);

// Selection spec, by kind:
//   {"kind": "order_min" | "order_max", "keys": [...]}
//   {"kind": "graph_min" | "graph_max", "s_values": [...]}
//   {"kind": "random", "n": 5, "seed": 42}
//   {"kind": "clopen_sum", "u": <spec>, "v": <spec>}
//   {"kind": "graded_partition", "blocks": [[0], [1, 2]], "within": [<spec>, ...]}
std::string spec_to_json(const SelectionSpec& spec);
SelectionSpec spec_from_json(std::string_view text);

struct ReportOptions {
  bool include_k_sets = false;
  bool include_witnesses = false;
  std::string source;           // metadata only
  double elapsed_ms = -1.0;     // metadata only; omitted when negative
};

// {"format_version", "kings", "k_sets"?, "witnesses"?, "tournament", "metadata"}
// Players appear by identifier. Timing lives under "metadata" only.
std::string report_to_json(const WeakSelection& sel, const KingReport& report, const ReportOptions& options);

std::string trace_to_json(const EscapeTrace& trace);
// Columns level,sample_size,king_ids,king_metric; multiple kings joined by ';'.
std::string trace_to_csv(const EscapeTrace& trace);

std::string certificate_to_json(const ContinuityCertificate& cert);

std::string sine_report_to_json(const SineKingReport& report);

// One edge a -> b per pair with a beating b, sorted by (a, b); kings drawn
// as double circles.
std::string tournament_to_dot(const WeakSelection& sel);

// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace kings::io
