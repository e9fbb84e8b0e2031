#include "kings/weak_selection.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace kings {

std::vector<std::string> default_players(std::size_t n, std::size_t offset) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(offset + i));
  return out;
}

WeakSelection::WeakSelection(std::size_t n, Bits bits, std::vector<std::string> players)
    : n_(n), players_(std::move(players)), bits_(std::move(bits)) {
  if (bits_.size() != pair_count(n_)) {
    throw InputError("choice vector has " + std::to_string(bits_.size()) + " entries, expected " +
                     std::to_string(pair_count(n_)));
  }
  if (players_.empty()) {
    players_ = default_players(n_);
  } else if (players_.size() != n_) {
    throw InputError("player list has " + std::to_string(players_.size()) + " identifiers for " +
                     std::to_string(n_) + " players");
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : players_) {
    if (!seen.insert(p).second) throw InputError("duplicate player identifier '" + p + "'");
  }
}

void WeakSelection::check_index(std::size_t a) const {
  if (a >= n_) {
    throw InputError("player index " + std::to_string(a) + " out of range for " + std::to_string(n_) +
                     " players");
  }
}

std::size_t WeakSelection::choice(std::size_t a, std::size_t b) const {
  check_index(a);
  check_index(b);
  if (a == b) throw InputError("choice is undefined on the self-pair {" + std::to_string(a) + "}");
  return choice_unchecked(a, b);
}

WeakSelection WeakSelection::with_players(std::vector<std::string> players) const {
  return WeakSelection(n_, bits_, std::move(players));
}

bool arrow(const WeakSelection& sel, std::size_t a, std::size_t b) {
  sel.check_index(a);
  sel.check_index(b);
  return a == b || sel.choice_unchecked(a, b) == b;
}

std::size_t out_degree(const WeakSelection& sel, std::size_t a) {
  sel.check_index(a);
  std::size_t wins = 0;
  for (std::size_t b = 0; b < sel.size(); ++b) {
    if (b != a && sel.choice_unchecked(a, b) == b) ++wins;
  }
  return wins;
}

Restriction restrict_to(const WeakSelection& sel, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InputError("cannot restrict to an empty subset");
  std::vector<std::size_t> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw InputError("restriction subset lists a player twice");
  }
  for (auto i : idx) sel.check_index(i);

  std::vector<std::string> names;
  names.reserve(idx.size());
  for (auto i : idx) names.push_back(sel.players()[i]);

  auto restricted = WeakSelection::from_rule(
      idx.size(),
      [&](std::size_t i, std::size_t j) { return sel.choice_unchecked(idx[i], idx[j]) == idx[i] ? i : j; },
      std::move(names));
  return {std::move(restricted), std::move(idx)};
}

}  // namespace kings
