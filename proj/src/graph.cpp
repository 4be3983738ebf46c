#include "imst/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "imst/errors.hpp"

namespace imst {

Graph::Graph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)), incidence_(node_count > 0 ? node_count : 0) {
    if (node_count_ < 1) {
        throw std::invalid_argument("graph needs at least one node");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.id != static_cast<int>(i)) {
            throw std::invalid_argument("edge id " + std::to_string(e.id) +
                                        " does not match its list position " + std::to_string(i));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        }
        if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        incidence_[e.u].push_back(e.id);
        incidence_[e.v].push_back(e.id);
    }
}

const Edge& Graph::edge(int id) const {
    if (id < 0 || id >= edge_count()) {
        throw std::out_of_range("edge id " + std::to_string(id) + " out of range");
    }
    return edges_[id];
}

std::span<const int> Graph::incident(int node) const {
    if (node < 0 || node >= node_count_) {
        throw std::out_of_range("node " + std::to_string(node) + " out of range");
    }
    return incidence_[node];
}

std::vector<std::pair<int, int>> Graph::neighbors(int node) const {
    std::vector<std::pair<int, int>> out;
    for (int id : incident(node)) {
        out.emplace_back(id, edges_[id].other(node));
    }
    return out;
}

namespace {

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::int64_t parse_int64(std::string_view tok, int line_no, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line_no, std::string(what) + " '" + std::string(tok) +
                                      "' overflows signed 64-bit range");
    }
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, std::string(what) + " '" + std::string(tok) + "' is not an integer");
    }
    return value;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
    std::int64_t v = parse_int64(tok, line_no, what);
    if (v < INT32_MIN || v > INT32_MAX) {
        throw ParseError(line_no, std::string(what) + " '" + std::string(tok) + "' out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    int node_count = -1;
    std::int64_t edge_count = -1;
    std::vector<Edge> edges;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "p") {
            if (node_count >= 0) {
                throw ParseError(line_no, "duplicate 'p' header");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "expected 'p <node_count> <edge_count>'");
            }
            node_count = parse_int(tokens[1], line_no, "node count");
            edge_count = parse_int64(tokens[2], line_no, "edge count");
            if (node_count < 1) {
                throw ParseError(line_no, "node count must be at least 1");
            }
            if (edge_count < 0) {
                throw ParseError(line_no, "edge count must be non-negative");
            }
        } else if (tokens[0] == "e") {
            if (node_count < 0) {
                throw ParseError(line_no, "edge line before 'p' header");
            }
            if (tokens.size() != 4) {
                throw ParseError(line_no, "expected 'e <u> <v> <cost>'");
            }
            if (static_cast<std::int64_t>(edges.size()) >= edge_count) {
                throw ParseError(line_no, "more edge lines than the header's edge count");
            }
            int u = parse_int(tokens[1], line_no, "endpoint");
            int v = parse_int(tokens[2], line_no, "endpoint");
            std::int64_t cost = parse_int64(tokens[3], line_no, "cost");
            if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
                throw ParseError(line_no, "endpoint out of range [0, " +
                                              std::to_string(node_count) + ")");
            }
            if (u == v) {
                throw ParseError(line_no, "self-loop on node " + std::to_string(u));
            }
            edges.push_back(Edge{static_cast<int>(edges.size()), u, v, cost});
        } else {
            throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
        }
    }

    if (node_count < 0) {
        throw ParseError(line_no, "missing 'p' header");
    }
    if (static_cast<std::int64_t>(edges.size()) != edge_count) {
        throw ParseError(line_no, "expected " + std::to_string(edge_count) + " edge lines, got " +
                                      std::to_string(edges.size()));
    }
    return Graph(node_count, std::move(edges));
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << ' ' << e.cost << '\n';
    }
    return out.str();
}

}  // namespace imst
