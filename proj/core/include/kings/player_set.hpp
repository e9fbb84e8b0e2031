#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace kings {

/// A subset of the players {0, ..., n-1} of one tournament.
///
/// Backed by a packed bitset so that the unions and intersections used by
/// relation composition run a word at a time.
class PlayerSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  PlayerSet() = default;
  explicit PlayerSet(std::size_t universe) : bits_(universe) {}
  PlayerSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : bits_(universe) {
    for (auto m : members) insert(m);
  }

  static PlayerSet all(std::size_t universe) {
    PlayerSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }

  bool contains(std::size_t p) const { return p < bits_.size() && bits_.test(p); }
  void insert(std::size_t p) { bits_.set(p); }
  void erase(std::size_t p) { bits_.reset(p); }

  /// Lowest member, or universe() when empty.
  std::size_t first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? universe() : p;
  }
  std::size_t next(std::size_t p) const {
    auto q = bits_.find_next(p);
    return q == Bits::npos ? universe() : q;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto p = bits_.find_first(); p != Bits::npos; p = bits_.find_next(p)) out.push_back(p);
    return out;
  }

  bool is_subset_of(const PlayerSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const PlayerSet& other) const { return bits_.intersects(other.bits_); }

  PlayerSet& operator|=(const PlayerSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  PlayerSet& operator&=(const PlayerSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend PlayerSet operator&(PlayerSet a, const PlayerSet& b) { return a &= b; }
  friend PlayerSet operator|(PlayerSet a, const PlayerSet& b) { return a |= b; }
  friend bool operator==(const PlayerSet& a, const PlayerSet& b) { return a.bits_ == b.bits_; }

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

}  // namespace kings
