#include "pmcount/edge_list.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pmcount/error.hpp"

namespace pmcount {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line that is neither blank nor a comment.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            return line;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::parse, "line " + std::to_string(number_) + ": " + why);
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t number(const LineReader& reader, std::string_view token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        reader.fail("expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

struct Header {
    std::size_t vertices;
    std::size_t edges;
};

Header read_header(LineReader& reader) {
    auto line = reader.next();
    if (!line) reader.fail("missing \"n m\" header");
    auto tok = tokens(*line);
    if (tok.size() != 2) reader.fail("header must be \"n m\"");
    return {number(reader, tok[0]), number(reader, tok[1])};
}

void expect_end(LineReader& reader) {
    if (reader.next()) reader.fail("more edge lines than the header declares");
}

template <typename Build>
auto guarded(LineReader& reader, Build&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::parse) throw;
        reader.fail(e.what());
    }
}

void write_comment(std::ostream& out, std::string_view comment) {
    while (!comment.empty()) {
        auto eol = comment.find('\n');
        out << "# " << comment.substr(0, eol) << '\n';
        if (eol == std::string_view::npos) break;
        comment.remove_prefix(eol + 1);
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    LineReader reader(in);
    const Header header = read_header(reader);
    std::vector<Edge> edges;
    edges.reserve(header.edges);
    for (std::size_t i = 0; i < header.edges; ++i) {
        auto line = reader.next();
        if (!line) reader.fail("expected " + std::to_string(header.edges) + " edge lines");
        auto tok = tokens(*line);
        if (tok.size() != 2) reader.fail("edge line must be \"u v\"");
        edges.push_back({number(reader, tok[0]), number(reader, tok[1])});
    }
    expect_end(reader);
    return guarded(reader, [&] { return Graph(header.vertices, std::move(edges)); });
}

OrientedGraph read_oriented_edge_list(std::istream& in) {
    LineReader reader(in);
    const Header header = read_header(reader);
    std::vector<Arc> arcs;
    arcs.reserve(header.edges);
    for (std::size_t i = 0; i < header.edges; ++i) {
        auto line = reader.next();
        if (!line) reader.fail("expected " + std::to_string(header.edges) + " arc lines");
        auto tok = tokens(*line);
        if (tok.size() != 3 || tok[1] != "->") reader.fail("arc line must be \"u -> v\"");
        arcs.push_back({number(reader, tok[0]), number(reader, tok[2])});
    }
    expect_end(reader);
    return guarded(reader, [&] { return OrientedGraph::from_arcs(header.vertices, arcs); });
}

void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment) {
    write_comment(out, comment);
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_oriented_edge_list(std::ostream& out, const OrientedGraph& d, std::string_view comment) {
    write_comment(out, comment);
    out << d.vertex_count() << ' ' << d.base().edge_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << " -> " << a.head << '\n';
}

}  // namespace pmcount
