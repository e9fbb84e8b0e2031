#include "kings/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "kings/constructions.hpp"
#include "kings/enumerate.hpp"
#include "kings/error.hpp"
#include "kings/kings.hpp"
#include "kings/rng.hpp"

namespace kings {

EscapeTrace gap_escape_experiment(std::size_t n_levels, bool include_right_endpoint) {
  if (n_levels == 0) throw InputError("levels must be at least 1");
  if (n_levels > 20) throw InputError("levels above 20 make samples of over a million points");

  EscapeTrace trace;
  trace.mode = EscapeMode::gap;
  trace.metric_name = "distance_to_gap";
  for (std::size_t k = 1; k <= n_levels; ++k) {
    const std::size_t cells = std::size_t{1} << k;
    const auto grid = uniform_grid(cells, include_right_endpoint);
    const auto sel = order_selection(grid, OrderMode::min);
    const auto kings = king_set(sel).members();

    EscapeLevel lvl;
    lvl.level = k;
    lvl.resolution = 1.0 / static_cast<double>(cells);
    lvl.sample_size = grid.size();
    lvl.kings = kings;
    for (auto z : kings) {
      lvl.king_ids.push_back(sel.players()[z]);
      lvl.king_coordinates.push_back({grid[z], 0.0});
      lvl.king_metric.push_back(1.0 - grid[z]);
    }
    trace.levels.push_back(std::move(lvl));
  }
  return trace;
}

EscapeTrace graded_escape_experiment(const std::vector<std::size_t>& block_sizes, std::size_t n_levels,
                                     std::uint64_t seed) {
  if (n_levels == 0) throw InputError("levels must be at least 1");
  if (block_sizes.empty()) throw InputError("block_sizes must be non-empty");
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    if (block_sizes[i] == 0) throw InputError("block_sizes[" + std::to_string(i) + "] must be at least 1");
  }

  EscapeTrace trace;
  trace.mode = EscapeMode::graded;
  trace.metric_name = "block_index";
  for (std::size_t level = 1; level <= n_levels; ++level) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<WeakSelection> within;
    std::vector<std::size_t> block_of;
    std::size_t next = 0;
    for (std::size_t k = 0; k < level; ++k) {
      const auto size = block_sizes[k % block_sizes.size()];
      std::vector<std::size_t> block(size);
      for (auto& p : block) {
        p = next++;
        block_of.push_back(k);
      }
      blocks.push_back(std::move(block));
      within.push_back(random_tournament(size, derive_seed(seed, level, k)));
    }
    const auto sel = graded_partition(blocks, within);
    const auto kings = king_set(sel).members();

    EscapeLevel lvl;
    lvl.level = level;
    lvl.resolution = static_cast<double>(level);
    lvl.sample_size = sel.size();
    lvl.kings = kings;
    for (auto z : kings) {
      lvl.king_ids.push_back(sel.players()[z]);
      lvl.king_metric.push_back(static_cast<double>(block_of[z]));
    }
    trace.levels.push_back(std::move(lvl));
  }
  return trace;
}

bool SineKingReport::min_king_is_right_end() const {
  return min_kings.size() == 1 && s_values[min_kings.front()] == 1.0;
}

bool SineKingReport::max_king_is_left_end() const {
  return max_kings.size() == 1 && s_values[max_kings.front()] == 0.0;
}

SineKingReport sine_king_experiment(std::size_t n_points) {
  if (n_points < 2) throw InputError("sine experiment needs at least 2 points");

  SineKingReport report;
  report.n_points = n_points;
  report.s_values = uniform_grid(n_points - 1, true);
  const auto space = sample_graph(sine_curve_f, report.s_values);

  auto sorted = report.s_values;
  std::sort(sorted.begin(), sorted.end());
  report.min_gap = sorted[1] - sorted[0];
  for (std::size_t i = 2; i < sorted.size(); ++i) report.min_gap = std::min(report.min_gap, sorted[i] - sorted[i - 1]);

  const auto sigma_min = graph_selection(report.s_values, OrderMode::min).selection;
  const auto sigma_max = graph_selection(report.s_values, OrderMode::max).selection;
  report.min_kings = king_report(sigma_min).kings.members();
  report.max_kings = king_report(sigma_max).kings.members();

  const double delta = report.min_gap / 2.0;
  const double epsilon = 4.0 * delta;
  report.min_certificate = continuity_falsify(space, sigma_min, delta, epsilon);
  report.max_certificate = continuity_falsify(space, sigma_max, delta, epsilon);
  return report;
}

WeakSelection threshold_selection(const std::vector<double>& xs, double cut) {
  return WeakSelection::from_rule(xs.size(), [&](std::size_t i, std::size_t j) {
    const bool i_smaller = xs[i] < xs[j];
    const bool both_low = xs[i] <= cut && xs[j] <= cut;
    if (both_low) return i_smaller ? i : j;
    return i_smaller ? j : i;
  });
}

ExhaustiveReport exhaustive_verify(std::size_t n_max) {
  if (n_max < 1 || n_max > kMaxEnumerationPlayers) {
    throw InputError("n_max must lie in 1.." + std::to_string(kMaxEnumerationPlayers));
  }
  constexpr std::size_t kMaxDetails = 16;
  const auto start = std::chrono::steady_clock::now();

  ExhaustiveReport report;
  report.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    ExhaustivePerSize row;
    row.n = n;
    const auto range = enumerate_tournaments(n);
    for (auto it = range.begin(); it != range.end(); ++it) {
      const auto sel = *it;
      const auto kr = king_report(sel);
      const DominanceRelation rel(sel);
      std::string problem;
      if (kr.kings.empty()) problem = "empty king set";
      else if (!kr.kings.contains(landau_king(sel))) problem = "landau king not in king set";
      else {
        for (std::size_t x = 0; x < n && problem.empty(); ++x) {
          if (k_set(sel, x) != k_set_via_composition(rel, x)) problem = "K-set routes disagree at x=" + std::to_string(x);
        }
      }
      ++row.tournaments;
      if (!problem.empty()) {
        ++row.failures;
        if (report.failure_details.size() < kMaxDetails) {
          report.failure_details.push_back("n=" + std::to_string(n) + " code=" + std::to_string(it.code()) + ": " +
                                           problem);
        }
      }
    }
    report.tournaments += row.tournaments;
    report.failures += row.failures;
    report.per_size.push_back(row);
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace kings
