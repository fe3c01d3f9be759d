#include "pendant_tc/graph.hpp"

namespace pendant_tc {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t body_length(int n)
{
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
    return (bits + 5) / 6;
}

} // namespace

// Layout: one byte n+63, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, big-endian within
// each byte, each byte offset by 63. Padding bits are zero.
Graph parse_graph6(std::string_view line, int max_vertices)
{
    std::size_t base = 0;
    if (line.starts_with(kHeader))
        base = kHeader.size();
    const std::string_view body = line.substr(base);
    if (body.empty())
        throw Graph6Error("empty graph6 record", base);

    const auto first = static_cast<unsigned char>(body[0]);
    if (first == 126)
        throw Graph6Error("extended-length graph6 (n > 62) is not supported", base);
    if (first < 63 || first > 126)
        throw Graph6Error("malformed graph6 header character", base);
    const int n = first - 63;
    if (n > max_vertices)
        throw Graph6Error("graph order " + std::to_string(n) + " exceeds limit " + std::to_string(max_vertices), base);

    const std::size_t expected = body_length(n);
    if (body.size() - 1 != expected)
        throw Graph6Error("graph6 body has " + std::to_string(body.size() - 1) + " bytes, expected " +
                              std::to_string(expected),
                          base + std::min(body.size(), expected + 1));

    const std::size_t total_bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
    for (std::size_t i = 0; i < expected; ++i) {
        const auto c = static_cast<unsigned char>(body[1 + i]);
        if (c < 63 || c > 126)
            throw Graph6Error("graph6 character out of range", base + 1 + i);
    }
    const std::size_t padding = expected * 6 - total_bits;
    if (expected && ((static_cast<unsigned char>(body[expected]) - 63U) & ((1U << padding) - 1U)))
        throw Graph6Error("nonzero graph6 padding bits", base + expected);

    auto bit_at = [&](std::size_t k) {
        const unsigned value = static_cast<unsigned char>(body[1 + k / 6]) - 63U;
        return ((value >> (5 - k % 6)) & 1U) != 0;
    };
    Graph g(n, std::min(max_vertices, kMaxVertices));
    std::size_t k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++k)
            if (bit_at(k))
                g.add_edge(row, col);
    return g;
}

std::string write_graph6(const Graph &g)
{
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument("short-form graph6 supports at most 62 vertices");
    std::string out;
    out.reserve(1 + body_length(n));
    out.push_back(static_cast<char>(n + 63));
    unsigned acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) {
        acc <<= (6 - filled);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

} // namespace pendant_tc
