#include "kings/kings.hpp"

namespace kings {

namespace {

void require_non_empty(const WeakSelection& sel) {
  if (sel.empty()) throw InputError("king queries need a non-empty player set");
}

}  // namespace

std::size_t landau_king(const WeakSelection& sel) {
  require_non_empty(sel);
  std::size_t best = 0;
  std::size_t best_degree = out_degree(sel, 0);
  for (std::size_t a = 1; a < sel.size(); ++a) {
    const auto d = out_degree(sel, a);
    if (d > best_degree) {
      best = a;
      best_degree = d;
    }
  }
  return best;
}

PlayerSet k_set(const WeakSelection& sel, std::size_t x) {
  sel.check_index(x);
  const std::size_t n = sel.size();
  PlayerSet out(n);
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool zy = (z == y) || sel.choice_unchecked(z, y) == y;
      const bool yx = (y == x) || sel.choice_unchecked(y, x) == x;
      if (zy && yx) {
        out.insert(z);
        break;
      }
    }
  }
  return out;
}

PlayerSet k_set_via_composition(const DominanceRelation& rel, std::size_t x) {
  if (x >= rel.size()) throw InputError("player index out of range");
  return rel.two_step_column(x);
}

PlayerSet k_set_via_composition(const WeakSelection& sel, std::size_t x) {
  sel.check_index(x);
  return k_set_via_composition(DominanceRelation(sel), x);
}

KingReport king_report(const WeakSelection& sel) {
  require_non_empty(sel);
  const std::size_t n = sel.size();
  const DominanceRelation rel(sel);

  KingReport report;
  report.k_sets.reserve(n);
  report.kings = PlayerSet::all(n);
  for (std::size_t x = 0; x < n; ++x) {
    report.k_sets.push_back(rel.two_step_column(x));
    report.kings &= report.k_sets.back();
  }

  for (auto z = report.kings.first(); z < n; z = report.kings.next(z)) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto via = (rel.out(z) & rel.in(x)).first();
      report.witnesses.push_back({z, via, x});
    }
  }
  return report;
}

PlayerSet king_set(const WeakSelection& sel) {
  require_non_empty(sel);
  const std::size_t n = sel.size();
  const DominanceRelation rel(sel);
  PlayerSet kings(n);
  const auto rows = rel.two_step_rows();
  for (std::size_t z = 0; z < n; ++z) {
    if (rows[z].full()) kings.insert(z);
  }
  return kings;
}

KingCheck is_king(const WeakSelection& sel, std::size_t z) {
  sel.check_index(z);
  const std::size_t n = sel.size();
  KingCheck check;
  check.via.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool zy = (z == y) || sel.choice_unchecked(z, y) == y;
      const bool yx = (y == x) || sel.choice_unchecked(y, x) == x;
      if (zy && yx) {
        check.via[x] = y;
        break;
      }
    }
    if (check.via[x] == n) {
      check.via.clear();
      return check;
    }
  }
  check.is_king = true;
  return check;
}

}  // namespace kings
