#include "kings/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "kings/error.hpp"

namespace kings {

namespace {

double sq_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Points within delta of each point (itself included), found through a hash
// grid with cell side delta so only the 3x3 surrounding cells are scanned.
std::vector<std::vector<std::size_t>> delta_neighbours(const SampledSpace& space, double delta) {
  const auto cell_of = [delta](double v) { return static_cast<std::int64_t>(std::floor(v / delta)); };
  const auto key = [](std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint64_t>(cy & 0xffffffff);
  };

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < space.size(); ++i) {
    cells[key(cell_of(space[i].x), cell_of(space[i].y))].push_back(i);
  }

  const double delta_sq = delta * delta;
  std::vector<std::vector<std::size_t>> nbrs(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto cx = cell_of(space[i].x);
    const auto cy = cell_of(space[i].y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells.find(key(cx + dx, cy + dy));
        if (it == cells.end()) continue;
        for (auto j : it->second) {
          if (sq_distance(space[i], space[j]) < delta_sq) nbrs[i].push_back(j);
        }
      }
    }
    std::sort(nbrs[i].begin(), nbrs[i].end());
  }
  return nbrs;
}

void check_inputs(const SampledSpace& space, const WeakSelection& sel, double delta, double epsilon) {
  if (space.size() != sel.size()) {
    throw InputError("space has " + std::to_string(space.size()) + " points but the selection has " +
                     std::to_string(sel.size()) + " players");
  }
  if (!(delta > 0.0)) throw InputError("delta must be positive");
  if (!(epsilon > delta)) throw InputError("epsilon must exceed delta");
}

std::string explain(const SampledSpace& space, const Violation& v) {
  const auto fmt = [&](std::size_t i) {
    return std::to_string(i) + "(" + std::to_string(space[i].x) + "," + std::to_string(space[i].y) + ")";
  };
  return "selection keeps " + fmt(v.a) + " over " + fmt(v.b) + " but picks " + fmt(v.b_perturbed) + " over " +
         fmt(v.a_perturbed);
}

}  // namespace

ContinuityCertificate continuity_falsify(const SampledSpace& space, const WeakSelection& sel, double delta,
                                         double epsilon, FalsifierOptions options) {
  check_inputs(space, sel, delta, epsilon);

  ContinuityCertificate cert;
  cert.delta = delta;
  cert.epsilon = epsilon;

  const auto nbrs = delta_neighbours(space, delta);
  const double eps_sq = epsilon * epsilon;
  const std::size_t n = space.size();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !(sq_distance(space[a], space[b]) > eps_sq)) continue;
      if (sel.choice_unchecked(a, b) != a) continue;  // only a-side picks can flip to the b'-side
      for (auto ap : nbrs[a]) {
        for (auto bp : nbrs[b]) {
          if (ap == bp || (ap == a && bp == b)) continue;
          if (!(sq_distance(space[ap], space[bp]) > eps_sq)) continue;
          ++cert.quadruples_examined;
          if (sel.choice_unchecked(ap, bp) != bp) continue;
          ++cert.violation_count;
          if (cert.violations.size() < options.max_recorded) {
            Violation v{a, b, ap, bp, {}};
            v.explanation = explain(space, v);
            cert.violations.push_back(std::move(v));
          }
        }
      }
    }
  }
  cert.verdict = cert.violation_count == 0 ? Verdict::pass : Verdict::violation;
  return cert;
}

bool replay(const SampledSpace& space, const WeakSelection& sel, const Violation& v, double delta, double epsilon) {
  check_inputs(space, sel, delta, epsilon);
  for (auto i : {v.a, v.b, v.a_perturbed, v.b_perturbed}) sel.check_index(i);
  const auto d2 = [&](std::size_t i, std::size_t j) { return sq_distance(space[i], space[j]); };
  return d2(v.a, v.a_perturbed) < delta * delta && d2(v.b, v.b_perturbed) < delta * delta &&
         d2(v.a, v.b) > epsilon * epsilon && d2(v.a_perturbed, v.b_perturbed) > epsilon * epsilon &&
         sel.choice(v.a, v.b) == v.a && sel.choice(v.a_perturbed, v.b_perturbed) == v.b_perturbed;
}

}  // namespace kings
