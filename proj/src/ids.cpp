#include "saga/ids.hpp"

#include "saga/error.hpp"

namespace saga {

ServicePair::ServicePair(ServiceId a, ServiceId b) {
  if (a == b) {
    throw Error(ErrorCode::SameService, "pair of identical services: " + a.str());
  }
  if (b < a) std::swap(a, b);
  first_ = std::move(a);
  second_ = std::move(b);
}

}  // namespace saga
