#include "cluscomp/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cluscomp {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& message) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + message);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return in;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

bool is_comment_or_blank(const std::vector<std::string>& tokens) {
    return tokens.empty() || tokens[0][0] == '#';
}

long long parse_int(const std::string& token, const std::string& path, std::size_t line,
                    const char* what) {
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(token.c_str(), &end, 10);
    if (errno != 0 || end != token.c_str() + token.size()) {
        fail(path, line, std::string("expected ") + what + ", got \"" + token + "\"");
    }
    return value;
}

double parse_real(const std::string& token, const std::string& path, std::size_t line,
                  const char* what) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (errno != 0 || end != token.c_str() + token.size()) {
        fail(path, line, std::string("expected ") + what + ", got \"" + token + "\"");
    }
    return value;
}

std::uint32_t parse_node(const std::string& token, std::size_t n, const std::string& path,
                         std::size_t line) {
    const long long id = parse_int(token, path, line, "node id");
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
        fail(path, line,
             "node id " + token + " out of range (n=" + std::to_string(n) + ")");
    }
    return static_cast<std::uint32_t>(id);
}

}  // namespace

std::vector<long long> read_labels(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<long long> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (const std::string& token : tokenize(line)) {
            labels.push_back(parse_int(token, path, line_no, "integer label"));
        }
    }
    if (labels.empty()) {
        throw std::runtime_error(path + ": no labels found");
    }
    return labels;
}

SimilarityGraph read_similarity(const std::string& path, std::size_t n) {
    std::ifstream in = open_or_throw(path);
    SimilarityGraph g(n);
    std::unordered_set<std::uint64_t> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (is_comment_or_blank(tokens)) {
            continue;
        }
        if (tokens.size() != 3) {
            fail(path, line_no, "expected \"i j w\"");
        }
        const std::uint32_t u = parse_node(tokens[0], n, path, line_no);
        const std::uint32_t v = parse_node(tokens[1], n, path, line_no);
        const double w = parse_real(tokens[2], path, line_no, "edge weight");
        if (!(w >= 0.0)) {
            fail(path, line_no, "edge weight must be nonnegative");
        }
        const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                                  std::max(u, v);
        if (!seen.insert(key).second) {
            fail(path, line_no, "duplicate edge " + tokens[0] + " " + tokens[1]);
        }
        g.add_edge(u, v, w);
    }
    return g;
}

AdjacencyGraph read_adjacency(const std::string& path, std::size_t n) {
    std::ifstream in = open_or_throw(path);
    AdjacencyGraph a(n);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (is_comment_or_blank(tokens)) {
            continue;
        }
        if (tokens.size() != 2 && tokens.size() != 3) {
            fail(path, line_no, "expected \"i j\"");
        }
        const std::uint32_t u = parse_node(tokens[0], n, path, line_no);
        const std::uint32_t v = parse_node(tokens[1], n, path, line_no);
        a.add_edge(u, v);
    }
    return a;
}

PointSet read_points(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    PointSet p;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (is_comment_or_blank(tokens)) {
            continue;
        }
        if (tokens.size() != 2) {
            fail(path, line_no, "expected \"x y\"");
        }
        const double x = parse_real(tokens[0], path, line_no, "coordinate");
        const double y = parse_real(tokens[1], path, line_no, "coordinate");
        if (!std::isfinite(x) || !std::isfinite(y)) {
            fail(path, line_no, "point coordinates must be finite");
        }
        p.points.push_back({x, y});
    }
    if (p.points.empty()) {
        throw std::runtime_error(path + ": no points found");
    }
    return p;
}

namespace {

std::string round_trip(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_similarity(const SimilarityGraph& s, std::ostream& out) {
    for (const WeightedEdge& e : s.edges()) {
        out << e.u << ' ' << e.v << ' ' << round_trip(e.weight) << '\n';
    }
}

void write_adjacency(const AdjacencyGraph& a, std::ostream& out) {
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        for (std::uint32_t j : a.neighbors(i)) {
            if (i < j) {
                out << i << ' ' << j << '\n';
            }
        }
    }
}

void write_points(const PointSet& p, std::ostream& out, const std::string& header_comment) {
    if (!header_comment.empty()) {
        out << "# " << header_comment << '\n';
    }
    for (const auto& point : p.points) {
        out << round_trip(point[0]) << ' ' << round_trip(point[1]) << '\n';
    }
}

}  // namespace cluscomp
