#include "saga/ingest.hpp"

#include <charconv>
#include <json.hpp>
#include <string_view>

#include "saga/error.hpp"

namespace saga {

namespace {

using nlohmann::json;

constexpr std::string_view kCsvHeader = "sender,receiver,bytes,count,timestamp";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& reason) {
  throw Error(code, "line " + std::to_string(line) + ": " + reason);
}

[[noreturn]] void unparseable(std::size_t line, const std::string& reason) {
  fail(ErrorCode::UnparseableLine, line, reason);
}

MessageRecord finish(ServiceId sender, ServiceId receiver, std::uint64_t bytes,
                     std::uint64_t count, Timestamp ts, std::size_t line) {
  if (sender.empty() || receiver.empty()) unparseable(line, "empty service id");
  if (sender == receiver) {
    fail(ErrorCode::SelfMessage, line, "sender equals receiver (" + sender.str() + ")");
  }
  if (count == 0) unparseable(line, "count must be >= 1");
  return MessageRecord{std::move(sender), std::move(receiver), bytes, count, ts};
}

std::string string_field(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    unparseable(line, std::string("missing or non-string field '") + key + "'");
  }
  return it->get<std::string>();
}

// Integer field; `negative` is the error raised for values below zero.
std::uint64_t uint_field(const json& obj, const char* key, std::size_t line,
                         std::optional<std::uint64_t> fallback, ErrorCode negative) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return *fallback;
    unparseable(line, std::string("missing field '") + key + "'");
  }
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  if (it->is_number_integer()) {
    fail(negative, line, std::string("field '") + key + "' is negative");
  }
  unparseable(line, std::string("field '") + key + "' is not an integer");
}

MessageRecord parse_jsonl_line(std::string_view text, std::size_t line) {
  json obj = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) unparseable(line, "not a JSON object");
  ServiceId sender(string_field(obj, "sender", line));
  ServiceId receiver(string_field(obj, "receiver", line));
  auto bytes = uint_field(obj, "bytes", line, std::nullopt, ErrorCode::NegativeBytes);
  auto count = uint_field(obj, "count", line, 1, ErrorCode::UnparseableLine);
  auto ts = uint_field(obj, "timestamp", line, std::nullopt, ErrorCode::UnparseableLine);
  return finish(std::move(sender), std::move(receiver), bytes, count,
                static_cast<Timestamp>(ts), line);
}

std::uint64_t csv_uint(std::string_view field, const char* name, std::size_t line,
                       ErrorCode negative) {
  field = trim(field);
  if (!field.empty() && field.front() == '-') {
    fail(negative, line, std::string("field '") + name + "' is negative");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    unparseable(line, std::string("field '") + name + "' is not an integer");
  }
  return value;
}

MessageRecord parse_csv_line(std::string_view text, std::size_t line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    fields.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 5) {
    unparseable(line, "expected 5 fields, got " + std::to_string(fields.size()));
  }
  ServiceId sender{std::string(trim(fields[0]))};
  ServiceId receiver{std::string(trim(fields[1]))};
  auto bytes = csv_uint(fields[2], "bytes", line, ErrorCode::NegativeBytes);
  auto count = trim(fields[3]).empty()
                   ? std::uint64_t{1}
                   : csv_uint(fields[3], "count", line, ErrorCode::UnparseableLine);
  auto ts = csv_uint(fields[4], "timestamp", line, ErrorCode::UnparseableLine);
  return finish(std::move(sender), std::move(receiver), bytes, count,
                static_cast<Timestamp>(ts), line);
}

}  // namespace

std::uint64_t MetricsWindow::bytes(const ServicePair& p) const {
  auto it = pair_bytes.find(p);
  return it == pair_bytes.end() ? 0 : it->second;
}

std::uint64_t MetricsWindow::messages(const ServicePair& p) const {
  auto it = pair_messages.find(p);
  return it == pair_messages.end() ? 0 : it->second;
}

TraceParseResult parse_trace(std::istream& in, TraceFormat format,
                             const TraceParseOptions& options) {
  TraceParseResult result;
  std::string raw;
  std::size_t line = 0;
  bool header_seen = format != TraceFormat::Csv;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty()) continue;
    if (!header_seen) {
      if (text != kCsvHeader) {
        unparseable(line, "expected CSV header '" + std::string(kCsvHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    try {
      result.records.push_back(format == TraceFormat::Jsonl ? parse_jsonl_line(text, line)
                                                            : parse_csv_line(text, line));
    } catch (const Error&) {
      if (!options.lenient) throw;
      ++result.skipped_lines;
    }
  }
  return result;
}

MetricsWindow aggregate(std::span<const MessageRecord> records, Timestamp window_start,
                        Timestamp window_end, const std::set<ServiceId>& declared_services) {
  if (window_end <= window_start) {
    throw Error(ErrorCode::InvalidWindow, "window_end must be greater than window_start");
  }
  MetricsWindow win;
  win.window_start = window_start;
  win.window_end = window_end;
  win.services = declared_services;
  for (const auto& r : records) {
    if (r.timestamp < window_start || r.timestamp >= window_end) continue;
    ServicePair key(r.sender, r.receiver);
    win.pair_bytes[key] += r.bytes;
    win.pair_messages[key] += r.count;
    win.total_bytes += r.bytes;
    win.total_messages += r.count;
    win.services.insert(r.sender);
    win.services.insert(r.receiver);
  }
  win.empty_window = win.pair_messages.empty();
  return win;
}

MetaMap parse_meta(std::istream& in) {
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw Error(ErrorCode::SchemaViolation, "metadata must be a JSON array");
  }
  MetaMap out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    if (!entry.is_object()) {
      throw Error(ErrorCode::SchemaViolation, "metadata entry " + std::to_string(i) +
                                                  " is not an object");
    }
    auto id_it = entry.find("id");
    if (id_it == entry.end() || !id_it->is_string() || id_it->get<std::string>().empty()) {
      throw Error(ErrorCode::MissingId, "metadata entry " + std::to_string(i) + " has no id");
    }
    ServiceMeta meta{ServiceId(id_it->get<std::string>()), {}, {}, {}};
    auto tag = [&](const char* key) -> std::optional<std::string> {
      auto it = entry.find(key);
      if (it == entry.end() || it->is_null()) return std::nullopt;
      if (!it->is_string()) {
        throw Error(ErrorCode::SchemaViolation, "metadata entry " + std::to_string(i) +
                                                    ": '" + key + "' must be a string");
      }
      return it->get<std::string>();
    };
    meta.privacy_tag = tag("privacy");
    meta.function_tag = tag("function");
    meta.operational_tag = tag("operational");
    auto id = meta.id;
    if (!out.emplace(id, std::move(meta)).second) {
      throw Error(ErrorCode::DuplicateService, "duplicate service in metadata: " + id.str());
    }
  }
  return out;
}

void validate(const MetricsWindow& win) {
  auto bad = [](const std::string& why) { throw Error(ErrorCode::SchemaViolation, why); };
  if (win.window_end <= win.window_start) bad("window_end must exceed window_start");
  if (win.pair_bytes.size() != win.pair_messages.size()) bad("pair key sets differ");
  std::uint64_t b = 0;
  std::uint64_t m = 0;
  auto bit = win.pair_bytes.begin();
  for (auto mit = win.pair_messages.begin(); mit != win.pair_messages.end(); ++mit, ++bit) {
    if (!(bit->first == mit->first)) bad("pair key sets differ");
    if (!win.services.contains(mit->first.first()) ||
        !win.services.contains(mit->first.second())) {
      bad("pair references an undeclared service");
    }
    b += bit->second;
    m += mit->second;
  }
  if (b != win.total_bytes) bad("total_bytes does not match pair sums");
  if (m != win.total_messages) bad("total_messages does not match pair sums");
  if (win.empty_window != win.pair_messages.empty()) bad("empty flag inconsistent");
}

}  // namespace saga
