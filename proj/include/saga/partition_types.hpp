#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "saga/ids.hpp"

namespace saga {

// k disjoint vertex subsets covering a graph's vertex set. Each subset is
// sorted; subsets are ordered by size descending, then smallest member.
struct Partition {
  std::vector<std::vector<ServiceId>> subsets;

  std::size_t k() const noexcept { return subsets.size(); }

  // Sorts members and subsets into the canonical order above.
  void canonicalize();

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Canonical order of subsets: larger first, then by first member.
bool subset_before(std::span<const ServiceId> a, std::span<const ServiceId> b);

// Throws InvalidPartition unless `p` is a disjoint cover of `vertices`
// with no empty subset.
void validate_partition(const Partition& p, std::span<const ServiceId> vertices);

}  // namespace saga
