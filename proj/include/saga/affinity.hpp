#pragma once

#include "saga/ids.hpp"
#include "saga/ingest.hpp"

namespace saga {

struct AffinityWeights {
  double data = 1.0;
  double privacy = 1.0;
  double coupling = 1.0;
  double functional = 1.0;
  double operational = 1.0;

  double sum() const { return data + privacy + coupling + functional + operational; }

  // Throws InvalidWeights unless every weight is finite and >= 0 and at
  // least one is positive.
  void validate() const;

  friend bool operator==(const AffinityWeights&, const AffinityWeights&) = default;
};

// Per-type affinities of one pair and their weighted sum.
struct AffinityBreakdown {
  double data = 0.0;         // [0,1]
  double privacy = 0.0;      // {0,1}
  double coupling = 0.0;     // [0,1]
  double functional = 0.0;   // {0,1}
  double operational = 0.0;  // {0,1}
  double combined = 0.0;

  friend bool operator==(const AffinityBreakdown&, const AffinityBreakdown&) = default;
};

// Share of all window bytes exchanged by u and v. Zero for an idle window.
double data_affinity(const ServiceId& u, const ServiceId& v, const MetricsWindow& win);

// Share of all window messages exchanged by u and v. Zero for an idle window.
double coupling_affinity(const ServiceId& u, const ServiceId& v, const MetricsWindow& win);

// Tag affinities are 1 only when both tags are present and equal.
double privacy_affinity(const ServiceMeta& u, const ServiceMeta& v);
double functional_affinity(const ServiceMeta& u, const ServiceMeta& v);
double operational_affinity(const ServiceMeta& u, const ServiceMeta& v);

// Services missing from `meta` are treated as having no tags.
AffinityBreakdown combined_affinity(const ServiceId& u, const ServiceId& v,
                                    const MetricsWindow& win, const MetaMap& meta,
                                    const AffinityWeights& weights);

}  // namespace saga
