#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace alder {

using ordered_json = nlohmann::ordered_json;

enum class CellStatus { ok, holds, fails, out_of_hypothesis, skipped };

std::string_view to_string(CellStatus s) noexcept;

/// One evaluated grid cell. `params` is a JSON object whose key order is the
/// canonical order of the report.
struct Cell {
    ordered_json params = ordered_json::object();
    CellStatus status = CellStatus::skipped;
    std::optional<std::string> value;  // decimal
    std::optional<std::string> witness;
    std::optional<std::string> note;
    double wall_ms = 0.0;
};

struct Tally {
    std::int64_t ok = 0, holds = 0, fails = 0, out_of_hypothesis = 0, skipped = 0;
    std::int64_t total() const noexcept { return ok + holds + fails + out_of_hypothesis + skipped; }
};

struct VerificationReport {
    std::string cmd;
    std::vector<Cell> cells;
    /// Informational reports (search) never drive a failing exit code.
    bool informational = false;
    /// Extra summary fields (e.g. number of cells scanned by a search).
    ordered_json extra = ordered_json::object();

    Tally tally() const noexcept;
    bool has_failures() const noexcept { return tally().fails > 0; }
    /// 0 = no in-hypothesis failure, 1 = at least one.
    int exit_code() const noexcept { return (!informational && has_failures()) ? 1 : 0; }
};

enum class Format { json, csv, human };

/// Throws std::invalid_argument on an unknown name.
Format parse_format(std::string_view name);

struct RenderOptions {
    Format format = Format::json;
    bool timing = false;
    bool summary = true;
};

/// Byte-stable rendering: identical reports render identically.
std::string render(const VerificationReport& report, const RenderOptions& options);

ordered_json cell_to_json(const std::string& cmd, const Cell& cell, bool timing);

}  // namespace alder
