#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kings/error.hpp"

namespace kings {

/// Identifiers "offset", "offset+1", ... used when no names are supplied.
std::vector<std::string> default_players(std::size_t n, std::size_t offset = 0);

/// A weak selection on a finite ground set: for every unordered pair {i, j}
/// exactly one member is chosen. Read as a tournament, a beats b iff the
/// selection chooses b from {a, b}.
///
/// Choices are packed one bit per pair, pairs ordered lexicographically
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...; a set bit means the higher index
/// of the pair is chosen. Immutable after construction.
class WeakSelection {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  WeakSelection() = default;

  /// `bits` must hold pair_count(n) entries. Player identifiers default to
  /// "0".."n-1" and must be distinct.
  WeakSelection(std::size_t n, Bits bits, std::vector<std::string> players = {});

  /// Build from a rule `pick(i, j)` called once for every i < j; it must
  /// return i or j.
  template <class Pick>
  static WeakSelection from_rule(std::size_t n, Pick&& pick, std::vector<std::string> players = {}) {
    Bits bits(pair_count(n));
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++p) {
        const std::size_t c = pick(i, j);
        if (c != i && c != j) throw InputError("selection rule returned a player outside its pair");
        if (c == j) bits.set(p);
      }
    }
    return WeakSelection(n, std::move(bits), std::move(players));
  }

  static constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

  /// Position of {i, j}, i < j < n, in the lexicographic pair order.
  static constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::vector<std::string>& players() const { return players_; }
  const Bits& bits() const { return bits_; }

  /// The chosen member of {a, b}. Requires a != b, both in range.
  std::size_t choice(std::size_t a, std::size_t b) const;

  /// Same without range checks; for inner loops that already validated.
  std::size_t choice_unchecked(std::size_t a, std::size_t b) const {
    const auto lo = a < b ? a : b;
    const auto hi = a < b ? b : a;
    return bits_.test(pair_index(lo, hi, n_)) ? hi : lo;
  }

  /// Same choices with different identifiers.
  WeakSelection with_players(std::vector<std::string> players) const;

  void check_index(std::size_t a) const;

  friend bool operator==(const WeakSelection& a, const WeakSelection& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.players_ == b.players_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> players_;
  Bits bits_;
};

/// Dominance: a -> b iff a == b, or a != b and the selection picks b from {a, b}.
bool arrow(const WeakSelection& sel, std::size_t a, std::size_t b);

/// Number of b != a with a -> b.
std::size_t out_degree(const WeakSelection& sel, std::size_t a);

struct Restriction {
  WeakSelection selection;
  // original_index[k] is the index in the parent of restricted player k.
  std::vector<std::size_t> original_index;
};

/// The restriction of `sel` to the pairs inside `subset`. The subset is
/// taken in ascending order; identifiers carry over from the parent.
Restriction restrict_to(const WeakSelection& sel, std::span<const std::size_t> subset);

}  // namespace kings
