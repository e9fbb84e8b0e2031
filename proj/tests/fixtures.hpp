#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "kings/player_set.hpp"
#include "kings/weak_selection.hpp"

namespace kings::test {

// 0 beats 1, 1 beats 2, 2 beats 0.
inline WeakSelection three_cycle() {
  return WeakSelection::from_rule(3, [](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0 && j == 1) return 1;
    if (i == 1 && j == 2) return 2;
    return 0;  // {0, 2}
  });
}

// Larger index beats smaller: the selection picks the smaller index.
inline WeakSelection transitive(std::size_t n) {
  return WeakSelection::from_rule(n, [](std::size_t i, std::size_t) { return i; });
}

inline std::set<std::size_t> as_set(const PlayerSet& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

}  // namespace kings::test
