#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace saga {

// Thin string wrapper so service and node names cannot be mixed up.
// Ordering is plain lexicographic byte order.
template <typename Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Name& n) {
    return os << n.value_;
  }

 private:
  std::string value_;
};

struct ServiceTag {};
struct NodeTag {};

using ServiceId = Name<ServiceTag>;
using NodeId = Name<NodeTag>;

// Unordered pair of distinct services, stored with first < second.
class ServicePair {
 public:
  ServicePair(ServiceId a, ServiceId b);

  const ServiceId& first() const noexcept { return first_; }
  const ServiceId& second() const noexcept { return second_; }

  friend auto operator<=>(const ServicePair&, const ServicePair&) = default;
  friend bool operator==(const ServicePair&, const ServicePair&) = default;

 private:
  ServiceId first_;
  ServiceId second_;
};

}  // namespace saga

template <typename Tag>
struct std::hash<saga::Name<Tag>> {
  std::size_t operator()(const saga::Name<Tag>& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};
