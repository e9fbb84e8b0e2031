#include "kings/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <unordered_set>

#include "kings/rng.hpp"

namespace kings {

namespace {

void check_distinct_keys(std::span<const double> keys, const std::string& field) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (std::isnan(keys[i])) throw InputError(field + "[" + std::to_string(i) + "] is NaN");
  }
  std::vector<double> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    auto pos = std::find(keys.begin(), keys.end(), *dup);
    auto second = std::find(pos + 1, keys.end(), *dup);
    throw InputError(field + "[" + std::to_string(second - keys.begin()) + "] duplicates " + field + "[" +
                     std::to_string(pos - keys.begin()) + "]");
  }
}

WeakSelection order_selection_checked(std::span<const double> keys, OrderMode mode) {
  return WeakSelection::from_rule(keys.size(), [&](std::size_t i, std::size_t j) {
    const bool i_smaller = keys[i] < keys[j];
    if (mode == OrderMode::min) return i_smaller ? i : j;
    return i_smaller ? j : i;
  });
}

constexpr std::array<std::string_view, 7> kKindNames = {"order_min", "order_max",  "clopen_sum", "graded_partition",
                                                        "graph_min", "graph_max", "random"};

}  // namespace

WeakSelection order_selection(std::span<const double> keys, OrderMode mode) {
  if (keys.empty()) throw InputError("order selection needs at least one key");
  check_distinct_keys(keys, "keys");
  return order_selection_checked(keys, mode);
}

WeakSelection clopen_sum(const WeakSelection& inner, const WeakSelection& outer) {
  if (inner.empty()) throw InputError("clopen sum needs a non-empty clopen part U");
  std::unordered_set<std::string> u_ids(inner.players().begin(), inner.players().end());
  for (const auto& id : outer.players()) {
    if (u_ids.contains(id)) throw InputError("clopen sum ground sets overlap at player '" + id + "'");
  }
  const std::size_t nu = inner.size();
  std::vector<std::string> ids = inner.players();
  ids.insert(ids.end(), outer.players().begin(), outer.players().end());

  return WeakSelection::from_rule(
      nu + outer.size(),
      [&](std::size_t i, std::size_t j) -> std::size_t {
        if (j < nu) return inner.choice_unchecked(i, j);
        if (i >= nu) return nu + outer.choice_unchecked(i - nu, j - nu);
        return j;  // i in U, j in V
      },
      std::move(ids));
}

WeakSelection graded_partition(const std::vector<std::vector<std::size_t>>& blocks,
                               std::span<const WeakSelection> within) {
  if (blocks.empty()) throw InputError("graded partition needs at least one block");
  if (within.size() != blocks.size()) {
    throw InputError("graded partition has " + std::to_string(blocks.size()) + " blocks but " +
                     std::to_string(within.size()) + " inner selections");
  }
  std::size_t n = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].empty()) throw InputError("blocks[" + std::to_string(k) + "] is empty");
    if (within[k].size() != blocks[k].size()) {
      throw InputError("inner selection " + std::to_string(k) + " has " + std::to_string(within[k].size()) +
                       " players, block has " + std::to_string(blocks[k].size()));
    }
    n += blocks[k].size();
  }

  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, unset);
  std::vector<std::size_t> local_of(n, unset);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      const auto p = blocks[k][i];
      const auto where = "blocks[" + std::to_string(k) + "][" + std::to_string(i) + "]";
      if (p >= n) throw InputError(where + " = " + std::to_string(p) + " is outside 0.." + std::to_string(n - 1));
      if (block_of[p] != unset) throw InputError(where + " = " + std::to_string(p) + " appears in two blocks");
      block_of[p] = k;
      local_of[p] = i;
    }
  }

  return WeakSelection::from_rule(n, [&](std::size_t i, std::size_t j) -> std::size_t {
    const auto bi = block_of[i];
    const auto bj = block_of[j];
    if (bi < bj) return i;
    if (bj < bi) return j;
    return within[bi].choice_unchecked(local_of[i], local_of[j]) == local_of[i] ? i : j;
  });
}

GraphSelection graph_selection(std::span<const double> s_values, OrderMode mode) {
  if (s_values.empty()) throw InputError("graph selection needs at least one parameter");
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    if (!(s_values[i] >= 0.0 && s_values[i] <= 1.0)) {
      throw InputError("s_values[" + std::to_string(i) + "] is outside [0, 1]");
    }
  }
  check_distinct_keys(s_values, "s_values");
  return {order_selection_checked(s_values, mode), std::vector<double>(s_values.begin(), s_values.end())};
}

WeakSelection random_tournament(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random tournament needs at least one player");
  WeakSelection::Bits bits(WeakSelection::pair_count(n));
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (stream_at(seed, p) >> 63) bits.set(p);
  }
  return WeakSelection(n, std::move(bits));
}

std::string_view to_string(SelectionKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<SelectionKind> parse_selection_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<SelectionKind>(i);
  }
  return std::nullopt;
}

namespace {

std::size_t player_count(const SelectionSpec& spec) {
  switch (spec.kind) {
    case SelectionKind::random:
      return spec.n;
    case SelectionKind::clopen_sum: {
      std::size_t n = 0;
      for (const auto& p : spec.parts) n += player_count(p);
      return n;
    }
    case SelectionKind::graded_partition: {
      std::size_t n = 0;
      for (const auto& b : spec.blocks) n += b.size();
      return n;
    }
    default:
      return spec.keys.size();
  }
}

void validate_at(const SelectionSpec& spec, const std::string& path) {
  switch (spec.kind) {
    case SelectionKind::order_min:
    case SelectionKind::order_max:
      if (spec.keys.empty()) throw InputError(path + "keys: must be a non-empty list");
      check_distinct_keys(spec.keys, path + "keys");
      return;
    case SelectionKind::graph_min:
    case SelectionKind::graph_max:
      if (spec.keys.empty()) throw InputError(path + "s_values: must be a non-empty list");
      for (std::size_t i = 0; i < spec.keys.size(); ++i) {
        if (!(spec.keys[i] >= 0.0 && spec.keys[i] <= 1.0)) {
          throw InputError(path + "s_values[" + std::to_string(i) + "]: outside [0, 1]");
        }
      }
      check_distinct_keys(spec.keys, path + "s_values");
      return;
    case SelectionKind::random:
      if (spec.n == 0) throw InputError(path + "n: must be at least 1");
      return;
    case SelectionKind::clopen_sum:
      if (spec.parts.size() != 2) throw InputError(path + "u, v: clopen_sum needs exactly two parts");
      validate_at(spec.parts[0], path + "u.");
      validate_at(spec.parts[1], path + "v.");
      return;
    case SelectionKind::graded_partition: {
      if (spec.blocks.empty()) throw InputError(path + "blocks: must be a non-empty list");
      std::size_t n = 0;
      for (const auto& b : spec.blocks) n += b.size();
      std::vector<bool> seen(n, false);
      for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
        const auto where = path + "blocks[" + std::to_string(k) + "]";
        if (spec.blocks[k].empty()) throw InputError(where + ": block is empty");
        for (auto p : spec.blocks[k]) {
          if (p >= n) throw InputError(where + ": player " + std::to_string(p) + " outside 0.." + std::to_string(n - 1));
          if (seen[p]) throw InputError(where + ": player " + std::to_string(p) + " appears in two blocks");
          seen[p] = true;
        }
      }
      if (!spec.parts.empty()) {
        if (spec.parts.size() != spec.blocks.size()) {
          throw InputError(path + "within: need one inner selection per block");
        }
        for (std::size_t k = 0; k < spec.parts.size(); ++k) {
          const auto sub = path + "within[" + std::to_string(k) + "]";
          validate_at(spec.parts[k], sub + ".");
          if (player_count(spec.parts[k]) != spec.blocks[k].size()) {
            throw InputError(sub + ": size does not match blocks[" + std::to_string(k) + "]");
          }
        }
      }
      return;
    }
  }
  throw InputError(path + "kind: unknown selection kind");
}

}  // namespace

void validate(const SelectionSpec& spec) { validate_at(spec, ""); }

WeakSelection materialize(const SelectionSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case SelectionKind::order_min:
      return order_selection(spec.keys, OrderMode::min);
    case SelectionKind::order_max:
      return order_selection(spec.keys, OrderMode::max);
    case SelectionKind::graph_min:
      return graph_selection(spec.keys, OrderMode::min).selection;
    case SelectionKind::graph_max:
      return graph_selection(spec.keys, OrderMode::max).selection;
    case SelectionKind::random:
      return random_tournament(spec.n, spec.seed);
    case SelectionKind::clopen_sum: {
      const auto u = materialize(spec.parts[0]);
      const auto v = materialize(spec.parts[1]);
      auto sum = clopen_sum(u.with_players(default_players(u.size())),
                            v.with_players(default_players(v.size(), u.size())));
      return sum;
    }
    case SelectionKind::graded_partition: {
      std::vector<WeakSelection> within;
      within.reserve(spec.blocks.size());
      for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
        if (!spec.parts.empty()) {
          within.push_back(materialize(spec.parts[k]));
        } else {
          std::vector<double> local(spec.blocks[k].size());
          for (std::size_t i = 0; i < local.size(); ++i) local[i] = static_cast<double>(i);
          within.push_back(order_selection(local, OrderMode::min));
        }
      }
      return graded_partition(spec.blocks, within);
    }
  }
  throw InputError("kind: unknown selection kind");
}

}  // namespace kings
