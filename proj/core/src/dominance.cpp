#include "kings/dominance.hpp"

namespace kings {

DominanceRelation::DominanceRelation(const WeakSelection& sel) {
  const std::size_t n = sel.size();
  out_.assign(n, PlayerSet(n));
  in_.assign(n, PlayerSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    out_[a].insert(a);
    in_[a].insert(a);
  }
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      // bit set: j chosen, so i -> j
      const bool i_beats_j = sel.bits().test(p);
      const std::size_t winner = i_beats_j ? i : j;
      const std::size_t loser = i_beats_j ? j : i;
      out_[winner].insert(loser);
      in_[loser].insert(winner);
    }
  }
}

std::vector<PlayerSet> DominanceRelation::two_step_rows() const {
  const std::size_t n = size();
  std::vector<PlayerSet> rows;
  rows.reserve(n);
  for (std::size_t z = 0; z < n; ++z) {
    PlayerSet reach(n);
    for (auto y = out_[z].first(); y < n; y = out_[z].next(y)) {
      reach |= out_[y];
      if (reach.full()) break;
    }
    rows.push_back(std::move(reach));
  }
  return rows;
}

PlayerSet DominanceRelation::two_step_column(std::size_t x) const {
  const std::size_t n = size();
  PlayerSet col(n);
  for (auto y = in_[x].first(); y < n; y = in_[x].next(y)) {
    col |= in_[y];
    if (col.full()) break;
  }
  return col;
}

}  // namespace kings
