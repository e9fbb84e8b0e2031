#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>

#include "kings/weak_selection.hpp"

namespace kings {

inline constexpr std::size_t kMaxEnumerationPlayers = 6;

/// Tournament number `code` on n players. The choice bit vector, read with
/// pair 0 as the most significant bit, is the binary expansion of `code`, so
/// codes 0, 1, 2, ... run through bit vectors in lexicographic order.
WeakSelection tournament_from_code(std::size_t n, std::uint64_t code);

/// Every labeled tournament on n players, each exactly once.
class TournamentRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = WeakSelection;
    using difference_type = std::ptrdiff_t;
    using reference = WeakSelection;
    using pointer = void;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}

    WeakSelection operator*() const { return tournament_from_code(n_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++code_;
      return tmp;
    }
    std::uint64_t code() const { return code_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_ && a.n_ == b.n_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t code_ = 0;
  };

  explicit TournamentRange(std::size_t n);

  std::size_t players() const { return n_; }
  std::uint64_t size() const { return count_; }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

/// Requires 1 <= n <= kMaxEnumerationPlayers.
TournamentRange enumerate_tournaments(std::size_t n);

}  // namespace kings
