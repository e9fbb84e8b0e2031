#include "kings/enumerate.hpp"

#include <string>

namespace kings {

namespace {

void check_range(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationPlayers) {
    throw InputError("enumeration supports 1.." + std::to_string(kMaxEnumerationPlayers) + " players, got " +
                     std::to_string(n));
  }
}

}  // namespace

WeakSelection tournament_from_code(std::size_t n, std::uint64_t code) {
  check_range(n);
  const std::size_t m = WeakSelection::pair_count(n);
  if (code >> m != 0) throw InputError("tournament code out of range");
  WeakSelection::Bits bits(m);
  for (std::size_t p = 0; p < m; ++p) {
    if ((code >> (m - 1 - p)) & 1U) bits.set(p);
  }
  return WeakSelection(n, std::move(bits));
}

TournamentRange::TournamentRange(std::size_t n) : n_(n), count_(0) {
  check_range(n);
  count_ = std::uint64_t{1} << WeakSelection::pair_count(n);
}

TournamentRange enumerate_tournaments(std::size_t n) { return TournamentRange(n); }

}  // namespace kings
