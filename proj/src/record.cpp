#include "subpal/record.hpp"

#include <cstdio>

namespace subpal {

std::optional<OutputFormat> parse_output_format(std::string_view text) noexcept {
  if (text == "table") return OutputFormat::Table;
  if (text == "jsonl") return OutputFormat::Jsonl;
  return std::nullopt;
}

std::string span_label(const std::optional<Span> &span) {
  if (!span) return "-";
  return std::to_string(span->first) + "-" + std::to_string(span->last);
}

nlohmann::ordered_json to_json(const StepReport &r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["max_pal"] = r.max_pal;
  j["min_unique_suff"] = r.min_unique_suff;
  if (r.new_palindrome)
    j["new"] = span_label(r.new_palindrome);
  else
    j["new"] = nullptr;
  j["closure_len"] = r.closure_len;
  j["distinct_count"] = r.distinct_count;
  return j;
}

std::string table_header() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%10s %10s %16s %21s %12s %15s", "n", "max_pal",
                "min_unique_suff", "new", "closure_len", "distinct_count");
  return buf;
}

std::string table_row(const StepReport &r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%10zu %10zu %16zu %21s %12zu %15zu", r.n, r.max_pal,
                r.min_unique_suff, span_label(r.new_palindrome).c_str(), r.closure_len,
                r.distinct_count);
  return buf;
}

std::string format_record(const StepReport &r, OutputFormat format) {
  return format == OutputFormat::Table ? table_row(r) : to_json(r).dump();
}

} // namespace subpal
