#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fockpw {

/// alpha in N^d.  Ordered lexicographically so it can key std::map; the
/// componentwise partial order is `le`.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t d);  // zero index
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  std::size_t dim() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  int& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |alpha| = sum of entries.
  int order() const;

  /// alpha + e_j
  MultiIndex bumped(std::size_t j) const;

  /// gamma <= alpha componentwise.
  bool le(const MultiIndex& other) const;

  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// All alpha in N^d with |alpha| <= max_order, ordered by total degree and then
/// lexicographically.
std::vector<MultiIndex> indices_up_to(std::size_t d, int max_order);

}  // namespace fockpw
