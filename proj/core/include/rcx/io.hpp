#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"

namespace rcx {

enum class ParseErrorKind {
    malformed_header,
    malformed_line,
    endpoint_out_of_range,
    duplicate_edge,
    self_loop,
    bad_colour,
    inconsistent,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

// Graph files: a header `p <n> <m>` followed by exactly m lines `e <u> <v>`
// with 1-indexed endpoints. Lines starting with `#` are comments. Writing
// emits edges sorted lexicographically, LF line endings, so output is
// byte-stable. Parsed vertices are the file ids minus one.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Colouring files: a header `k <n> <m> <t>` followed by m lines
// `c <u> <v> <colour>`, one per host edge; t is the number of distinct
// colours used.
EdgeColouring parse_colouring(std::string_view text);
std::string write_colouring(const EdgeColouring& c);

// Vertex colouring files: a header `v <n> <t>` followed by n lines
// `a <vertex> <colour>`.
VertexColouring parse_vertex_colouring(std::string_view text);
std::string write_vertex_colouring(const VertexColouring& vc);

}  // namespace rcx
