#include "kings/io.hpp"

#include <charconv>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kings/error.hpp"

namespace kings::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_text(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void reject_unknown(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw InputError(path + it.key() + ": unknown field");
  }
}

const Json& field(const Json& obj, const char* name, const std::string& path) {
  auto it = obj.find(name);
  if (it == obj.end()) throw InputError(path + name + ": missing field");
  return *it;
}

std::size_t as_index(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw InputError(where + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

double as_double(const Json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  return v.get<double>();
}

std::vector<double> as_doubles(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_double(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_version(const Json& root, const std::string& path) {
  const auto& v = field(root, "format_version", path);
  if (!v.is_number_integer() || v.get<std::int64_t>() != kFormatVersion) {
    throw InputError(path + "format_version: unsupported (expected " + std::to_string(kFormatVersion) + ")");
  }
}

Json ids_of(const WeakSelection& sel, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(sel.players()[i]);
  return out;
}

Json tournament_json(const WeakSelection& sel) {
  Json choices = Json::array();
  const std::size_t n = sel.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      choices.push_back(Json{{"i", i}, {"j", j}, {"pick", sel.choice_unchecked(i, j)}});
    }
  }
  return Json{{"format_version", kFormatVersion}, {"players", sel.players()}, {"choices", std::move(choices)}};
}

Json spec_json(const SelectionSpec& spec) {
  Json j;
  j["kind"] = std::string(to_string(spec.kind));
  switch (spec.kind) {
    case SelectionKind::order_min:
    case SelectionKind::order_max:
      j["keys"] = spec.keys;
      break;
    case SelectionKind::graph_min:
    case SelectionKind::graph_max:
      j["s_values"] = spec.keys;
      break;
    case SelectionKind::random:
      j["n"] = spec.n;
      j["seed"] = spec.seed;
      break;
    case SelectionKind::clopen_sum:
      if (spec.parts.size() == 2) {
        j["u"] = spec_json(spec.parts[0]);
        j["v"] = spec_json(spec.parts[1]);
      }
      break;
    case SelectionKind::graded_partition: {
      j["blocks"] = spec.blocks;
      if (!spec.parts.empty()) {
        Json within = Json::array();
        for (const auto& p : spec.parts) within.push_back(spec_json(p));
        j["within"] = std::move(within);
      }
      break;
    }
  }
  return j;
}

SelectionSpec spec_from(const Json& j, const std::string& path) {
  if (!j.is_object()) throw InputError((path.empty() ? std::string("spec") : path) + ": expected an object");
  const auto& kind_field = field(j, "kind", path);
  if (!kind_field.is_string()) throw InputError(path + "kind: expected a string");
  const auto kind = parse_selection_kind(kind_field.get<std::string>());
  if (!kind) throw InputError(path + "kind: unknown selection kind '" + kind_field.get<std::string>() + "'");

  SelectionSpec spec;
  spec.kind = *kind;
  switch (spec.kind) {
    case SelectionKind::order_min:
    case SelectionKind::order_max:
      reject_unknown(j, {"kind", "keys"}, path);
      spec.keys = as_doubles(field(j, "keys", path), path + "keys");
      break;
    case SelectionKind::graph_min:
    case SelectionKind::graph_max:
      reject_unknown(j, {"kind", "s_values"}, path);
      spec.keys = as_doubles(field(j, "s_values", path), path + "s_values");
      break;
    case SelectionKind::random: {
      reject_unknown(j, {"kind", "n", "seed"}, path);
      spec.n = as_index(field(j, "n", path), path + "n");
      const auto& seed = field(j, "seed", path);
      if (!seed.is_number_unsigned() &&
          !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
        throw InputError(path + "seed: expected a non-negative 64-bit integer");
      }
      spec.seed = seed.get<std::uint64_t>();
      break;
    }
    case SelectionKind::clopen_sum:
      reject_unknown(j, {"kind", "u", "v"}, path);
      spec.parts.push_back(spec_from(field(j, "u", path), path + "u."));
      spec.parts.push_back(spec_from(field(j, "v", path), path + "v."));
      break;
    case SelectionKind::graded_partition: {
      reject_unknown(j, {"kind", "blocks", "within"}, path);
      const auto& blocks = field(j, "blocks", path);
      if (!blocks.is_array()) throw InputError(path + "blocks: expected an array of arrays");
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto where = path + "blocks[" + std::to_string(k) + "]";
        if (!blocks[k].is_array()) throw InputError(where + ": expected an array of player indices");
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < blocks[k].size(); ++i) {
          block.push_back(as_index(blocks[k][i], where + "[" + std::to_string(i) + "]"));
        }
        spec.blocks.push_back(std::move(block));
      }
      if (auto it = j.find("within"); it != j.end()) {
        if (!it->is_array()) throw InputError(path + "within: expected an array of specs");
        for (std::size_t k = 0; k < it->size(); ++k) {
          spec.parts.push_back(spec_from((*it)[k], path + "within[" + std::to_string(k) + "]."));
        }
      }
      break;
    }
  }
  return spec;
}

Json certificate_json(const ContinuityCertificate& cert) {
  Json violations = Json::array();
  for (const auto& v : cert.violations) {
    violations.push_back(Json{{"a", v.a},
                              {"b", v.b},
                              {"a_perturbed", v.a_perturbed},
                              {"b_perturbed", v.b_perturbed},
                              {"explanation", v.explanation}});
  }
  return Json{{"delta", cert.delta},
              {"epsilon", cert.epsilon},
              {"verdict", cert.verdict == Verdict::pass ? "pass" : "violation"},
              {"violation_count", cert.violation_count},
              {"quadruples_examined", cert.quadruples_examined},
              {"violations", std::move(violations)}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string tournament_to_json(const WeakSelection& sel) { return dump(tournament_json(sel)); }

WeakSelection tournament_from_json(std::string_view text) {
  const auto root = parse_text(text, "tournament");
  if (!root.is_object()) throw InputError("tournament: expected a JSON object");
  reject_unknown(root, {"format_version", "players", "choices"}, "");
  check_version(root, "");

  const auto& players_json = field(root, "players", "");
  if (!players_json.is_array()) throw InputError("players: expected an array of strings");
  std::vector<std::string> players;
  for (std::size_t i = 0; i < players_json.size(); ++i) {
    if (!players_json[i].is_string()) throw InputError("players[" + std::to_string(i) + "]: expected a string");
    players.push_back(players_json[i].get<std::string>());
  }
  const std::size_t n = players.size();

  const auto& choices = field(root, "choices", "");
  if (!choices.is_array()) throw InputError("choices: expected an array of {i, j, pick} records");
  WeakSelection::Bits bits(WeakSelection::pair_count(n));
  WeakSelection::Bits seen(bits.size());
  for (std::size_t k = 0; k < choices.size(); ++k) {
    const auto where = "choices[" + std::to_string(k) + "]";
    const auto& rec = choices[k];
    if (!rec.is_object()) throw InputError(where + ": expected an object");
    reject_unknown(rec, {"i", "j", "pick"}, where + ".");
    const auto i = as_index(field(rec, "i", where + "."), where + ".i");
    const auto j = as_index(field(rec, "j", where + "."), where + ".j");
    const auto pick = as_index(field(rec, "pick", where + "."), where + ".pick");
    const auto pair = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    if (!(i < j)) throw InputError(where + ": pair " + pair + " must have i < j");
    if (j >= n) throw InputError(where + ": pair " + pair + " names a player outside 0.." + std::to_string(n) + "-1");
    if (pick != i && pick != j) {
      throw InputError(where + ": pick " + std::to_string(pick) + " is not a member of pair " + pair);
    }
    const auto p = WeakSelection::pair_index(i, j, n);
    if (seen.test(p)) throw InputError(where + ": pair " + pair + " listed twice");
    seen.set(p);
    if (pick == j) bits.set(p);
  }
  if (!seen.all()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!seen.test(WeakSelection::pair_index(i, j, n))) {
          throw InputError("choices: pair {" + std::to_string(i) + "," + std::to_string(j) + "} has no record");
        }
      }
    }
  }
  return WeakSelection(n, std::move(bits), std::move(players));
}

std::string space_to_json(const SampledSpace& space) {
  Json points = Json::array();
  for (const auto& p : space.points()) points.push_back(Json::array({p.x, p.y}));
  Json root{{"format_version", kFormatVersion}, {"points", std::move(points)}};
  if (!space.parameters().empty()) root["parameters"] = space.parameters();
  if (!space.labels().empty()) root["labels"] = space.labels();
  return dump(root);
}

SampledSpace space_from_json(std::string_view text) {
  const auto root = parse_text(text, "space");
  if (!root.is_object()) throw InputError("space: expected a JSON object");
  reject_unknown(root, {"format_version", "points", "parameters", "labels"}, "");
  check_version(root, "");
  const auto& pts = field(root, "points", "");
  if (!pts.is_array()) throw InputError("points: expected an array of [x, y] pairs");
  std::vector<Point> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto where = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) throw InputError(where + ": expected [x, y]");
    points.push_back({as_double(pts[i][0], where + "[0]"), as_double(pts[i][1], where + "[1]")});
  }
  std::vector<double> params;
  if (auto it = root.find("parameters"); it != root.end()) params = as_doubles(*it, "parameters");
  std::vector<std::string> labels;
  if (auto it = root.find("labels"); it != root.end()) {
    if (!it->is_array()) throw InputError("labels: expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw InputError("labels[" + std::to_string(i) + "]: expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  return SampledSpace(std::move(points), std::move(params), std::move(labels));
}

std::string spec_to_json(const SelectionSpec& spec) { return dump(spec_json(spec)); }

SelectionSpec spec_from_json(std::string_view text) {
  auto spec = spec_from(parse_text(text, "spec"), "");
  validate(spec);
  return spec;
}

std::string report_to_json(const WeakSelection& sel, const KingReport& report, const ReportOptions& options) {
  Json root;
  root["format_version"] = kFormatVersion;
  root["kings"] = ids_of(sel, report.kings.members());
  if (options.include_k_sets) {
    Json ks = Json::object();
    for (std::size_t x = 0; x < report.k_sets.size(); ++x) ks[sel.players()[x]] = ids_of(sel, report.k_sets[x].members());
    root["k_sets"] = std::move(ks);
  }
  if (options.include_witnesses) {
    Json ws = Json::array();
    for (const auto& w : report.witnesses) {
      ws.push_back(Json::array({sel.players()[w.king], sel.players()[w.via], sel.players()[w.target]}));
    }
    root["witnesses"] = std::move(ws);
  }
  root["tournament"] = tournament_json(sel);
  Json meta = Json::object();
  if (!options.source.empty()) meta["source"] = options.source;
  if (options.elapsed_ms >= 0.0) meta["elapsed_ms"] = options.elapsed_ms;
  root["metadata"] = std::move(meta);
  return dump(root);
}

std::string trace_to_json(const EscapeTrace& trace) {
  Json levels = Json::array();
  for (const auto& l : trace.levels) {
    Json coords = Json::array();
    for (const auto& p : l.king_coordinates) coords.push_back(Json::array({p.x, p.y}));
    levels.push_back(Json{{"level", l.level},
                          {"resolution", l.resolution},
                          {"sample_size", l.sample_size},
                          {"kings", l.kings},
                          {"king_ids", l.king_ids},
                          {"king_coordinates", std::move(coords)},
                          {"king_metric", l.king_metric}});
  }
  return dump(Json{{"mode", trace.mode == EscapeMode::gap ? "gap" : "graded"},
                   {"metric", trace.metric_name},
                   {"levels", std::move(levels)}});
}

std::string trace_to_csv(const EscapeTrace& trace) {
  std::ostringstream out;
  out << "level,sample_size,king_ids,king_metric\n";
  for (const auto& l : trace.levels) {
    out << l.level << ',' << l.sample_size << ',';
    for (std::size_t i = 0; i < l.king_ids.size(); ++i) out << (i ? ";" : "") << l.king_ids[i];
    out << ',';
    for (std::size_t i = 0; i < l.king_metric.size(); ++i) out << (i ? ";" : "") << format_double(l.king_metric[i]);
    out << '\n';
  }
  return out.str();
}

std::string certificate_to_json(const ContinuityCertificate& cert) { return dump(certificate_json(cert)); }

std::string sine_report_to_json(const SineKingReport& r) {
  const auto s_of = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(r.s_values[i]);
    return out;
  };
  return dump(Json{{"n_points", r.n_points},
                   {"min_gap", r.min_gap},
                   {"sigma_min", Json{{"kings", r.min_kings},
                                      {"king_s", s_of(r.min_kings)},
                                      {"unique_king_at_s1", r.min_king_is_right_end()},
                                      {"continuity", certificate_json(r.min_certificate)}}},
                   {"sigma_max", Json{{"kings", r.max_kings},
                                      {"king_s", s_of(r.max_kings)},
                                      {"unique_king_at_s0", r.max_king_is_left_end()},
                                      {"continuity", certificate_json(r.max_certificate)}}}});
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string tournament_to_dot(const WeakSelection& sel) {
  const auto kings = sel.empty() ? PlayerSet() : king_set(sel);
  std::ostringstream out;
  out << "digraph tournament {\n";
  for (std::size_t a = 0; a < sel.size(); ++a) {
    out << "  " << dot_quote(sel.players()[a]);
    if (kings.contains(a)) out << " [shape=doublecircle, king=true]";
    out << ";\n";
  }
  for (std::size_t a = 0; a < sel.size(); ++a) {
    for (std::size_t b = 0; b < sel.size(); ++b) {
      if (a != b && sel.choice_unchecked(a, b) == b) {
        out << "  " << dot_quote(sel.players()[a]) << " -> " << dot_quote(sel.players()[b]) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace kings::io
