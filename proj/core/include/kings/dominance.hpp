#pragma once

#include <cstddef>
#include <vector>

#include "kings/player_set.hpp"
#include "kings/weak_selection.hpp"

namespace kings {

/// The relation F = {(a, b) : a -> b} of a weak selection, materialized as a
/// boolean matrix. Rows give out-sets, columns give in-sets; both include the
/// diagonal since -> is reflexive.
class DominanceRelation {
 public:
  explicit DominanceRelation(const WeakSelection& sel);

  std::size_t size() const { return out_.size(); }
  bool arrow(std::size_t a, std::size_t b) const { return out_[a].contains(b); }

  /// {b : a -> b}
  const PlayerSet& out(std::size_t a) const { return out_[a]; }
  /// {a : a -> b}
  const PlayerSet& in(std::size_t b) const { return in_[b]; }

  /// Rows of the composite F.F: row z is {x : z -> y -> x for some y}.
  std::vector<PlayerSet> two_step_rows() const;

  /// Column x of F.F, i.e. the first-coordinate projection of
  /// {(a, b, x) : a -> b -> x}.
  PlayerSet two_step_column(std::size_t x) const;

 private:
  std::vector<PlayerSet> out_;
  std::vector<PlayerSet> in_;
};

}  // namespace kings
