#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace localh::cli {

enum class RecordKind { LocalH, Gamma, HPlus, NcCount, PermCount, VerifyReport, Partitions, Perm };
enum class Format { Plain, Json, Csv };

std::string_view to_string(RecordKind k);
RecordKind parse_kind(std::string_view text);
Format parse_format(std::string_view text);

/// One unit of output. Integers that do not fit in int64 are stored as
/// decimal strings; everything else is plain JSON.
struct OutputRecord {
  RecordKind kind;
  nlohmann::ordered_json payload;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Renders a record, newline-terminated. Json is one object per line:
/// {"kind": ..., "payload": {...}}.
std::string emit(const OutputRecord& r, Format f);

/// Inverse of emit(r, Format::Json). Throws std::invalid_argument on
/// malformed input.
OutputRecord parse_record(std::string_view json_line);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitBudget = 3;

/// Entry point behind the `localh` binary; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace localh::cli
