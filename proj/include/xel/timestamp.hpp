#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace xel {

/// UTC instant with millisecond resolution.
using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// Parses ISO-8601 `YYYY-MM-DDTHH:MM:SS[.fff][Z|+HH:MM|-HH:MM|+HHMM]`.
/// Offsets are normalized to UTC. Fractional digits beyond milliseconds are
/// truncated. A missing zone designator is read as UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Formats as `YYYY-MM-DDTHH:MM:SSZ`, or `YYYY-MM-DDTHH:MM:SS.fffZ` when the
/// millisecond part is non-zero.
std::string format_timestamp(Timestamp ts);

}  // namespace xel
