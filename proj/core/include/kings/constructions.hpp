#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kings/weak_selection.hpp"

namespace kings {

enum class OrderMode { min, max };

/// Order selection: choose the smaller key (min) or the larger key (max).
/// Under min the player with the largest key beats everyone. Keys must be
/// distinct.
WeakSelection order_selection(std::span<const double> keys, OrderMode mode);

/// Selection on the disjoint union U + V. Inside U follow `inner`, inside V
/// follow `outer`; every cross pair {u, v} picks v, so U dominates V.
/// Players are inner's followed by outer's; identifiers must not overlap.
/// `outer` may be empty, `inner` may not.
WeakSelection clopen_sum(const WeakSelection& inner, const WeakSelection& outer);

/// Selection graded by a partition U_0, ..., U_{N-1} of {0, ..., n-1}: for
/// a in U_m, b in U_k with m < k the selection picks a, so higher blocks
/// dominate lower ones. Inside block k, within[k] decides, its local player
/// i standing for blocks[k][i].
WeakSelection graded_partition(const std::vector<std::vector<std::size_t>>& blocks,
                               std::span<const WeakSelection> within);

struct GraphSelection {
  WeakSelection selection;
  std::vector<double> s_values;  // parameter of player i, so its point is (s, f(s))
};

/// sigma_min / sigma_max on sampled points (s, f(s)) of a function graph:
/// pick the point with the smaller (larger) parameter. Parameters must be
/// distinct and lie in [0, 1].
GraphSelection graph_selection(std::span<const double> s_values, OrderMode mode);

/// Each pair orientation is bit 63 of stream_at(seed, pair_index), so pair
/// draws are independent of iteration order and identical on all platforms.
WeakSelection random_tournament(std::size_t n, std::uint64_t seed);

enum class SelectionKind { order_min, order_max, clopen_sum, graded_partition, graph_min, graph_max, random };

std::string_view to_string(SelectionKind kind);
std::optional<SelectionKind> parse_selection_kind(std::string_view name);

/// Declarative recipe for a weak selection. Which fields are read depends
/// on `kind`:
///   order_min / order_max   keys
///   graph_min / graph_max   keys (the s-values)
///   random                  n, seed
///   clopen_sum              parts = {U, V}
///   graded_partition        blocks, optional parts (one per block; when
///                           absent each block is ordered by index, higher
///                           index winning)
struct SelectionSpec {
  SelectionKind kind = SelectionKind::random;
  std::vector<double> keys;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<SelectionSpec> parts;
};

/// Throws InputError naming the offending field, e.g. "keys[2]".
void validate(const SelectionSpec& spec);

WeakSelection materialize(const SelectionSpec& spec);

}  // namespace kings
