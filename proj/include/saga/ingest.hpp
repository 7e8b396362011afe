#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "saga/ids.hpp"

namespace saga {

using Timestamp = std::int64_t;  // milliseconds since epoch

struct MessageRecord {
  ServiceId sender;
  ServiceId receiver;
  std::uint64_t bytes = 0;  // total for the record, not per message
  std::uint64_t count = 1;
  Timestamp timestamp = 0;

  friend bool operator==(const MessageRecord&, const MessageRecord&) = default;
};

struct ServiceMeta {
  ServiceId id;
  std::optional<std::string> privacy_tag;
  std::optional<std::string> function_tag;
  std::optional<std::string> operational_tag;

  friend bool operator==(const ServiceMeta&, const ServiceMeta&) = default;
};

using MetaMap = std::map<ServiceId, ServiceMeta>;

// Traffic aggregates over the half-open window [window_start, window_end).
struct MetricsWindow {
  Timestamp window_start = 0;
  Timestamp window_end = 1;
  std::map<ServicePair, std::uint64_t> pair_bytes;
  std::map<ServicePair, std::uint64_t> pair_messages;
  std::uint64_t total_bytes = 0;
  std::uint64_t total_messages = 0;
  std::set<ServiceId> services;
  bool empty_window = false;  // no record fell inside the window

  std::uint64_t bytes(const ServicePair& p) const;
  std::uint64_t messages(const ServicePair& p) const;

  friend bool operator==(const MetricsWindow&, const MetricsWindow&) = default;
};

enum class TraceFormat { Jsonl, Csv };

struct TraceParseOptions {
  bool lenient = false;  // skip malformed lines instead of throwing
};

struct TraceParseResult {
  std::vector<MessageRecord> records;
  std::size_t skipped_lines = 0;
};

// Throws Error{UnparseableLine|SelfMessage|NegativeBytes} naming the 1-based
// line, unless options.lenient is set.
TraceParseResult parse_trace(std::istream& in, TraceFormat format,
                             const TraceParseOptions& options = {});

MetricsWindow aggregate(std::span<const MessageRecord> records,
                        Timestamp window_start, Timestamp window_end,
                        const std::set<ServiceId>& declared_services = {});

MetaMap parse_meta(std::istream& in);

// Verifies the MetricsWindow invariants (totals, key sets, canonical pairs).
// Used after deserialization.
void validate(const MetricsWindow& win);

}  // namespace saga
