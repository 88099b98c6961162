#include "fockpw/multi_index.hpp"

#include <numeric>

#include "fockpw/errors.hpp"

namespace fockpw {

MultiIndex::MultiIndex(std::size_t d) : entries_(d, 0) {}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("multi-index entries must be non-negative");
  }
}

int MultiIndex::order() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

MultiIndex MultiIndex::bumped(std::size_t j) const {
  MultiIndex out = *this;
  ++out.entries_.at(j);
  return out;
}

bool MultiIndex::le(const MultiIndex& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("multi-index dimensions differ");
  for (std::size_t j = 0; j < dim(); ++j) {
    if (entries_[j] > other.entries_[j]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(entries_[j]);
  }
  return s + ")";
}

namespace {

void fill_degree(std::vector<int>& cur, std::size_t pos, int remaining, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  // Lexicographic within a degree: larger leading entries come last.
  for (int k = 0; k <= remaining; ++k) {
    cur[pos] = k;
    fill_degree(cur, pos + 1, remaining - k, out);
  }
}

}  // namespace

std::vector<MultiIndex> indices_up_to(std::size_t d, int max_order) {
  if (d == 0) throw DomainError("dimension must be at least 1");
  std::vector<MultiIndex> out;
  std::vector<int> cur(d, 0);
  for (int n = 0; n <= max_order; ++n) fill_degree(cur, 0, n, out);
  return out;
}

}  // namespace fockpw
