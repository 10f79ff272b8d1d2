#include "rcx/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace rcx {

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next non-comment, non-blank line (trimmed of trailing CR).
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

long parse_int(std::string_view field, int line, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(ParseErrorKind::malformed_line,
                         line, std::string("expected integer for ") + what);
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line))
        throw ParseError(ParseErrorKind::malformed_header, 1, "missing `p <n> <m>` header");
    auto header = split_fields(line);
    if (header.size() != 3 || header[0] != "p")
        throw ParseError(ParseErrorKind::malformed_header, reader.line_no,
                         "expected header `p <n> <m>`");
    const long n = parse_int(header[1], reader.line_no, "vertex count");
    const long m = parse_int(header[2], reader.line_no, "edge count");
    if (n < 0 || n > Graph::max_order || m < 0)
        throw ParseError(ParseErrorKind::malformed_header, reader.line_no,
                         "vertex or edge count out of range");

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw ParseError(ParseErrorKind::malformed_line, reader.line_no + 1,
                             "fewer edge lines than declared");
        auto fields = split_fields(line);
        if (fields.size() != 3 || fields[0] != "e")
            throw ParseError(ParseErrorKind::malformed_line, reader.line_no,
                             "expected edge line `e <u> <v>`");
        long u = parse_int(fields[1], reader.line_no, "endpoint");
        long v = parse_int(fields[2], reader.line_no, "endpoint");
        if (u == v)
            throw ParseError(ParseErrorKind::self_loop, reader.line_no,
                             "self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(ParseErrorKind::endpoint_out_of_range, reader.line_no,
                             "endpoint outside 1..n");
        if (u > v) std::swap(u, v);
        auto pair = std::make_pair(static_cast<int>(u - 1), static_cast<int>(v - 1));
        if (!seen.insert(pair).second)
            throw ParseError(ParseErrorKind::duplicate_edge, reader.line_no, "duplicate edge");
        edges.push_back(pair);
    }
    if (reader.next(line))
        throw ParseError(ParseErrorKind::malformed_line, reader.line_no,
                         "unexpected content after edge list");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

EdgeColouring parse_colouring(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line))
        throw ParseError(ParseErrorKind::malformed_header, 1, "missing `k <n> <m> <t>` header");
    auto header = split_fields(line);
    if (header.size() != 4 || header[0] != "k")
        throw ParseError(ParseErrorKind::malformed_header, reader.line_no,
                         "expected header `k <n> <m> <t>`");
    const long n = parse_int(header[1], reader.line_no, "vertex count");
    const long m = parse_int(header[2], reader.line_no, "edge count");
    const long t = parse_int(header[3], reader.line_no, "colour count");
    if (n < 0 || n > Graph::max_order || m < 0)
        throw ParseError(ParseErrorKind::malformed_header, reader.line_no,
                         "vertex or edge count out of range");

    std::vector<std::pair<int, int>> edges;
    std::vector<int> colours;
    std::set<std::pair<int, int>> seen;
    for (long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw ParseError(ParseErrorKind::malformed_line, reader.line_no + 1,
                             "fewer colour lines than declared");
        auto fields = split_fields(line);
        if (fields.size() != 4 || fields[0] != "c")
            throw ParseError(ParseErrorKind::malformed_line, reader.line_no,
                             "expected line `c <u> <v> <colour>`");
        long u = parse_int(fields[1], reader.line_no, "endpoint");
        long v = parse_int(fields[2], reader.line_no, "endpoint");
        long col = parse_int(fields[3], reader.line_no, "colour");
        if (u == v) throw ParseError(ParseErrorKind::self_loop, reader.line_no, "self-loop");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(ParseErrorKind::endpoint_out_of_range, reader.line_no,
                             "endpoint outside 1..n");
        if (col < 1 || col > 1'000'000'000)
            throw ParseError(ParseErrorKind::bad_colour, reader.line_no,
                             "colour must be a positive integer");
        if (u > v) std::swap(u, v);
        auto pair = std::make_pair(static_cast<int>(u - 1), static_cast<int>(v - 1));
        if (!seen.insert(pair).second)
            throw ParseError(ParseErrorKind::duplicate_edge, reader.line_no, "duplicate edge");
        edges.push_back(pair);
        colours.push_back(static_cast<int>(col));
    }
    if (reader.next(line))
        throw ParseError(ParseErrorKind::malformed_line, reader.line_no,
                         "unexpected content after colour list");

    // Align colours with the canonical edge order of the host graph.
    Graph host(static_cast<int>(n), edges);
    std::vector<int> by_edge(host.edge_count());
    for (std::size_t i = 0; i < edges.size(); ++i)
        by_edge[host.edge_index(edges[i].first, edges[i].second)] = colours[i];
    EdgeColouring result(std::move(host), std::move(by_edge));
    if (result.colour_count() != t)
        throw ParseError(ParseErrorKind::inconsistent, 1,
                         "header colour count " + std::to_string(t) + " but " +
                             std::to_string(result.colour_count()) + " distinct colours used");
    return result;
}

std::string write_colouring(const EdgeColouring& c) {
    std::ostringstream out;
    const Graph& g = c.host();
    out << "k " << g.order() << ' ' << g.edge_count() << ' ' << c.colour_count() << '\n';
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        out << "c " << u + 1 << ' ' << v + 1 << ' ' << c.colour_of_edge(i) << '\n';
    }
    return out.str();
}

VertexColouring parse_vertex_colouring(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line))
        throw ParseError(ParseErrorKind::malformed_header, 1, "missing `v <n> <t>` header");
    auto header = split_fields(line);
    if (header.size() != 3 || header[0] != "v")
        throw ParseError(ParseErrorKind::malformed_header, reader.line_no,
                         "expected header `v <n> <t>`");
    const long n = parse_int(header[1], reader.line_no, "vertex count");
    const long t = parse_int(header[2], reader.line_no, "colour count");
    if (n < 0 || n > Graph::max_order)
        throw ParseError(ParseErrorKind::malformed_header, reader.line_no,
                         "vertex count out of range");

    std::vector<int> colours(n, 0);
    for (long i = 0; i < n; ++i) {
        if (!reader.next(line))
            throw ParseError(ParseErrorKind::malformed_line, reader.line_no + 1,
                             "fewer assignment lines than declared");
        auto fields = split_fields(line);
        if (fields.size() != 3 || fields[0] != "a")
            throw ParseError(ParseErrorKind::malformed_line, reader.line_no,
                             "expected line `a <vertex> <colour>`");
        const long v = parse_int(fields[1], reader.line_no, "vertex");
        const long col = parse_int(fields[2], reader.line_no, "colour");
        if (v < 1 || v > n)
            throw ParseError(ParseErrorKind::endpoint_out_of_range, reader.line_no,
                             "vertex outside 1..n");
        if (col < 1 || col > 1'000'000'000)
            throw ParseError(ParseErrorKind::bad_colour, reader.line_no,
                             "colour must be a positive integer");
        if (colours[v - 1] != 0)
            throw ParseError(ParseErrorKind::duplicate_edge, reader.line_no,
                             "vertex assigned twice");
        colours[v - 1] = static_cast<int>(col);
    }
    if (reader.next(line))
        throw ParseError(ParseErrorKind::malformed_line, reader.line_no,
                         "unexpected content after assignments");
    VertexColouring vc{std::move(colours)};
    if (vc.colour_count() != t)
        throw ParseError(ParseErrorKind::inconsistent, 1, "header colour count mismatch");
    return vc;
}

std::string write_vertex_colouring(const VertexColouring& vc) {
    std::ostringstream out;
    out << "v " << vc.order() << ' ' << vc.colour_count() << '\n';
    for (int v = 0; v < vc.order(); ++v) out << "a " << v + 1 << ' ' << vc.colours[v] << '\n';
    return out.str();
}

}  // namespace rcx
