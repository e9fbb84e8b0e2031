#pragma once

#include <cstddef>
#include <vector>

#include "kings/dominance.hpp"
#include "kings/player_set.hpp"
#include "kings/weak_selection.hpp"

namespace kings {

/// z -> via -> target
struct Witness {
  std::size_t king;
  std::size_t via;
  std::size_t target;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct KingReport {
  PlayerSet kings;                 // intersection of all k_sets
  std::vector<PlayerSet> k_sets;   // k_sets[x] = {z : z -> y -> x for some y}
  std::vector<Witness> witnesses;  // one per (king, target), ordered by king then target
};

/// A vertex of maximum out-degree, lowest index on ties. Every such vertex
/// of a finite tournament is a king.
std::size_t landau_king(const WeakSelection& sel);

/// {z : z -> y -> x for some y}, by direct search over (z, y).
PlayerSet k_set(const WeakSelection& sel, std::size_t x);

/// The same set obtained by composing the dominance relation with itself
/// and projecting the slice with last coordinate x onto the first coordinate.
PlayerSet k_set_via_composition(const WeakSelection& sel, std::size_t x);
PlayerSet k_set_via_composition(const DominanceRelation& rel, std::size_t x);

/// Full king analysis. Throws InputError on an empty selection.
KingReport king_report(const WeakSelection& sel);

/// Kings only, without K-sets or witnesses.
PlayerSet king_set(const WeakSelection& sel);

struct KingCheck {
  bool is_king = false;
  // via[x] is a y with z -> y -> x; filled only when is_king.
  std::vector<std::size_t> via;
};

KingCheck is_king(const WeakSelection& sel, std::size_t z);

}  // namespace kings
