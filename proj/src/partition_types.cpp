#include "saga/partition_types.hpp"

#include <algorithm>
#include <set>

#include "saga/error.hpp"

namespace saga {

bool subset_before(std::span<const ServiceId> a, std::span<const ServiceId> b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void Partition::canonicalize() {
  for (auto& s : subsets) std::sort(s.begin(), s.end());
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) { return subset_before(a, b); });
}

void validate_partition(const Partition& p, std::span<const ServiceId> vertices) {
  std::set<ServiceId> expected(vertices.begin(), vertices.end());
  std::set<ServiceId> seen;
  std::size_t total = 0;
  for (const auto& subset : p.subsets) {
    if (subset.empty()) throw Error(ErrorCode::InvalidPartition, "empty subset");
    for (const auto& id : subset) {
      if (!expected.contains(id)) {
        throw Error(ErrorCode::InvalidPartition, "unknown vertex in partition: " + id.str());
      }
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::InvalidPartition, "vertex in two subsets: " + id.str());
      }
      ++total;
    }
  }
  if (total != expected.size()) {
    throw Error(ErrorCode::InvalidPartition, "partition does not cover every vertex");
  }
}

}  // namespace saga
