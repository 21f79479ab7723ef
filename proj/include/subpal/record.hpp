#ifndef SUBPAL_RECORD_HPP
#define SUBPAL_RECORD_HPP

#include "subpal/detector.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace subpal {

enum class OutputFormat { Table, Jsonl };

std::optional<OutputFormat> parse_output_format(std::string_view text) noexcept;

/// "first-last", or "-" when nothing new was found.
std::string span_label(const std::optional<Span> &span);

/// JSON object with keys n, max_pal, min_unique_suff, new, closure_len,
/// distinct_count, in that order. `new` is a "first-last" string or null.
nlohmann::ordered_json to_json(const StepReport &r);

std::string table_header();
std::string table_row(const StepReport &r);

/// One line, no trailing newline.
std::string format_record(const StepReport &r, OutputFormat format);

} // namespace subpal

#endif // SUBPAL_RECORD_HPP
