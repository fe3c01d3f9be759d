#pragma once

#include "pendant_tc/serialize.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pendant_tc::cli {

inline constexpr const char *kToolName = "pendant_tc";
inline constexpr const char *kToolVersion = "0.1.0";

/// JSON report: header, records, summary, then timing in its own section so
/// that everything above it is reproducible byte for byte.
struct Report {
    std::vector<std::string> command;
    Json records = Json::array();
    Json summary = Json::object();
    double wall_seconds = 0.0;

    Json to_json() const;
};

/// Fixed-column CSV with RFC 4180 quoting.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(std::string_view cell);

/// Writes to `path`, or to `fallback` when path is empty or "-".
/// Throws std::runtime_error if the file cannot be written.
void emit(const std::string &text, const std::string &path, std::ostream &fallback);

struct GraphLine {
    int line = 0;
    std::string text;
};

/// Nonblank lines of a graph6 file ("-" reads `in`); lines starting with '#'
/// are comments. Throws std::runtime_error if the file cannot be opened.
std::vector<GraphLine> read_graph_lines(const std::string &path, std::istream &in);

} // namespace pendant_tc::cli
