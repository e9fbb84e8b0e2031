#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kings/continuity.hpp"
#include "kings/sampled_space.hpp"
#include "kings/weak_selection.hpp"

namespace kings {

/// One refinement level of an escape experiment.
struct EscapeLevel {
  std::size_t level = 0;
  double resolution = 0.0;  // grid spacing (gap) or block count (graded)
  std::size_t sample_size = 0;
  std::vector<std::size_t> kings;
  std::vector<std::string> king_ids;
  std::vector<Point> king_coordinates;
  // Per king: distance to the missing point 1 (gap) or its block index (graded).
  std::vector<double> king_metric;
};

enum class EscapeMode { gap, graded };

struct EscapeTrace {
  EscapeMode mode = EscapeMode::gap;
  std::string metric_name;  // "distance_to_gap" or "block_index"
  std::vector<EscapeLevel> levels;
};

/// Level k = 1..n_levels samples {j / 2^k} of [0, 1) (or of [0, 1] when
/// `include_right_endpoint`, the compact control) and records the kings of
/// the min-order selection with their distance to 1.
EscapeTrace gap_escape_experiment(std::size_t n_levels, bool include_right_endpoint = false);

/// Level N = 1..n_levels builds the graded selection on blocks
/// U_0..U_{N-1}, block k of size block_sizes[k % block_sizes.size()],
/// each block ordered by a random tournament seeded by
/// derive_seed(seed, N, k). Records every king's block index.
EscapeTrace graded_escape_experiment(const std::vector<std::size_t>& block_sizes, std::size_t n_levels,
                                     std::uint64_t seed);

struct SineKingReport {
  std::size_t n_points = 0;
  std::vector<double> s_values;
  std::vector<std::size_t> min_kings;  // kings of sigma_min
  std::vector<std::size_t> max_kings;  // kings of sigma_max
  double min_gap = 0.0;
  ContinuityCertificate min_certificate;
  ContinuityCertificate max_certificate;

  bool min_king_is_right_end() const;
  bool max_king_is_left_end() const;
};

/// Samples the sine-curve graph at n_points evenly spaced parameters on
/// [0, 1], finds the sigma_min and sigma_max kings and runs the continuity
/// falsifier on both with delta = min_gap / 2, epsilon = 4 delta.
SineKingReport sine_king_experiment(std::size_t n_points);

/// Discontinuous control on points of [0, 1]: picks the smaller point when
/// both are <= cut, otherwise the larger.
WeakSelection threshold_selection(const std::vector<double>& xs, double cut = 0.5);

struct ExhaustivePerSize {
  std::size_t n = 0;
  std::uint64_t tournaments = 0;
  std::uint64_t failures = 0;
};

struct ExhaustiveReport {
  std::size_t n_max = 0;
  std::uint64_t tournaments = 0;
  std::uint64_t failures = 0;
  std::vector<ExhaustivePerSize> per_size;
  std::vector<std::string> failure_details;  // first few only
  double elapsed_seconds = 0.0;
};

/// Every labeled tournament on 1..n_max players: the king set is non-empty,
/// contains landau_king, and direct and composed K-sets agree.
ExhaustiveReport exhaustive_verify(std::size_t n_max);

}  // namespace kings
