#include "saga/affinity.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "saga/error.hpp"

namespace saga {

namespace {

double ratio(std::uint64_t part, std::uint64_t total) {
  if (total == 0) return 0.0;
  return static_cast<double>(part) / static_cast<double>(total);
}

double tags_match(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  return a && b && *a == *b ? 1.0 : 0.0;
}

const ServiceMeta& meta_or_blank(const MetaMap& meta, const ServiceId& id,
                                 ServiceMeta& blank) {
  auto it = meta.find(id);
  if (it != meta.end()) return it->second;
  blank.id = id;
  return blank;
}

}  // namespace

void AffinityWeights::validate() const {
  for (double w : {data, privacy, coupling, functional, operational}) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::InvalidWeights, "affinity weights must be finite and >= 0");
    }
  }
  if (sum() <= 0.0) {
    throw Error(ErrorCode::InvalidWeights, "at least one affinity weight must be positive");
  }
}

double data_affinity(const ServiceId& u, const ServiceId& v, const MetricsWindow& win) {
  ServicePair key(u, v);
  return ratio(win.bytes(key), win.total_bytes);
}

double coupling_affinity(const ServiceId& u, const ServiceId& v, const MetricsWindow& win) {
  ServicePair key(u, v);
  return ratio(win.messages(key), win.total_messages);
}

double privacy_affinity(const ServiceMeta& u, const ServiceMeta& v) {
  return tags_match(u.privacy_tag, v.privacy_tag);
}

double functional_affinity(const ServiceMeta& u, const ServiceMeta& v) {
  return tags_match(u.function_tag, v.function_tag);
}

double operational_affinity(const ServiceMeta& u, const ServiceMeta& v) {
  return tags_match(u.operational_tag, v.operational_tag);
}

AffinityBreakdown combined_affinity(const ServiceId& u, const ServiceId& v,
                                    const MetricsWindow& win, const MetaMap& meta,
                                    const AffinityWeights& weights) {
  ServiceMeta blank_u;
  ServiceMeta blank_v;
  const auto& mu = meta_or_blank(meta, u, blank_u);
  const auto& mv = meta_or_blank(meta, v, blank_v);

  AffinityBreakdown out;
  out.data = data_affinity(u, v, win);
  out.coupling = coupling_affinity(u, v, win);
  out.privacy = privacy_affinity(mu, mv);
  out.functional = functional_affinity(mu, mv);
  out.operational = operational_affinity(mu, mv);
  out.combined = weights.data * out.data + weights.privacy * out.privacy +
                 weights.coupling * out.coupling + weights.functional * out.functional +
                 weights.operational * out.operational;
  return out;
}

}  // namespace saga
