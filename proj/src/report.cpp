#include "alder/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alder {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string param_text(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

ordered_json tally_json(const Tally& t) {
    ordered_json j = ordered_json::object();
    j["cells"] = t.total();
    j["ok"] = t.ok;
    j["holds"] = t.holds;
    j["fails"] = t.fails;
    j["out-of-hypothesis"] = t.out_of_hypothesis;
    j["skipped"] = t.skipped;
    return j;
}

}  // namespace

std::string_view to_string(CellStatus s) noexcept {
    switch (s) {
        case CellStatus::ok: return "ok";
        case CellStatus::holds: return "holds";
        case CellStatus::fails: return "fails";
        case CellStatus::out_of_hypothesis: return "out-of-hypothesis";
        case CellStatus::skipped: return "skipped";
    }
    return "skipped";
}

Tally VerificationReport::tally() const noexcept {
    Tally t;
    for (const auto& c : cells) {
        switch (c.status) {
            case CellStatus::ok: ++t.ok; break;
            case CellStatus::holds: ++t.holds; break;
            case CellStatus::fails: ++t.fails; break;
            case CellStatus::out_of_hypothesis: ++t.out_of_hypothesis; break;
            case CellStatus::skipped: ++t.skipped; break;
        }
    }
    return t;
}

Format parse_format(std::string_view name) {
    if (name == "json" || name == "json-lines" || name == "jsonl") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "human") return Format::human;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

ordered_json cell_to_json(const std::string& cmd, const Cell& cell, bool timing) {
    ordered_json j = ordered_json::object();
    j["v"] = 1;
    j["cmd"] = cmd;
    j["params"] = cell.params;
    j["status"] = std::string(to_string(cell.status));
    j["value"] = cell.value ? ordered_json(*cell.value) : ordered_json(nullptr);
    j["witness"] = cell.witness ? ordered_json(*cell.witness) : ordered_json(nullptr);
    if (cell.note) j["note"] = *cell.note;
    if (timing) j["wall_ms"] = cell.wall_ms;
    return j;
}

std::string render(const VerificationReport& report, const RenderOptions& options) {
    std::ostringstream os;
    const auto tally = report.tally();
    switch (options.format) {
        case Format::json: {
            for (const auto& c : report.cells) os << cell_to_json(report.cmd, c, options.timing).dump() << '\n';
            if (options.summary) {
                ordered_json s = ordered_json::object();
                s["v"] = 1;
                s["cmd"] = report.cmd;
                s["summary"] = tally_json(tally);
                for (const auto& [k, v] : report.extra.items()) s["summary"][k] = v;
                os << s.dump() << '\n';
            }
            break;
        }
        case Format::csv: {
            // Column set: union of parameter names in order of first appearance.
            std::vector<std::string> columns;
            for (const auto& c : report.cells)
                for (const auto& [k, v] : c.params.items())
                    if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
            os << "cmd";
            for (const auto& col : columns) os << ',' << csv_field(col);
            os << ",status,value,witness,note";
            if (options.timing) os << ",wall_ms";
            os << '\n';
            for (const auto& c : report.cells) {
                os << csv_field(report.cmd);
                for (const auto& col : columns)
                    os << ',' << (c.params.contains(col) ? csv_field(param_text(c.params[col])) : "");
                os << ',' << to_string(c.status) << ',' << csv_field(c.value.value_or("")) << ','
                   << csv_field(c.witness.value_or("")) << ',' << csv_field(c.note.value_or(""));
                if (options.timing) os << ',' << c.wall_ms;
                os << '\n';
            }
            break;
        }
        case Format::human: {
            for (const auto& c : report.cells) {
                os << report.cmd;
                for (const auto& [k, v] : c.params.items()) os << ' ' << k << '=' << param_text(v);
                os << "  " << to_string(c.status);
                if (c.value) os << "  value=" << *c.value;
                if (c.note) os << "  [" << *c.note << ']';
                if (c.witness) os << "  witness: " << *c.witness;
                if (options.timing) os << "  (" << c.wall_ms << " ms)";
                os << '\n';
            }
            if (options.summary) {
                os << "summary: " << tally.total() << " cells, " << tally.ok << " ok, " << tally.holds << " hold, " << tally.fails
                   << " fail, " << tally.out_of_hypothesis << " out-of-hypothesis, " << tally.skipped
                   << " skipped";
                for (const auto& [k, v] : report.extra.items()) os << ", " << k << '=' << param_text(v);
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

}  // namespace alder
