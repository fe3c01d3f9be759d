#include "report.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace pendant_tc::cli {

Json Report::to_json() const
{
    Json j;
    j["schema"] = 1;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["records"] = records;
    j["summary"] = summary;
    j["timing"] = {{"wall_seconds", wall_seconds}};
    return j;
}

std::string csv_escape(std::string_view cell)
{
    if (cell.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void CsvTable::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns_.size())
        throw std::logic_error("CSV row width does not match the header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const
{
    std::string out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (i ? "," : "") + csv_escape(cells[i]);
        out += '\n';
    };
    line(columns_);
    for (const auto &r : rows_)
        line(r);
    return out;
}

void emit(const std::string &text, const std::string &path, std::ostream &fallback)
{
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    file << text;
}

std::vector<GraphLine> read_graph_lines(const std::string &path, std::istream &in)
{
    std::ifstream file;
    std::istream *src = &in;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw std::runtime_error("cannot open " + path);
        src = &file;
    }
    std::vector<GraphLine> out;
    std::string text;
    for (int line = 1; std::getline(*src, text); ++line) {
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
            text.pop_back();
        if (text.empty() || text.front() == '#')
            continue;
        out.push_back({line, text});
    }
    return out;
}

} // namespace pendant_tc::cli
