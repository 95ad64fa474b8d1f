#include <gadgetforge/errors.hpp>
#include <gadgetforge/graph_io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace gadgetforge {

namespace {

auto tokens_of(std::string_view line) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &what)
{
    throw InputError("line " + std::to_string(line) + ": " + what);
}

auto number(std::string_view token, std::size_t line) -> std::uint64_t
{
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

auto parse_graph(std::string_view text) -> Graph
{
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (have_header)
                fail(line_no, "duplicate 'p' header");
            if (tok.size() != 4 || tok[1] != "edge")
                fail(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = number(tok[2], line_no);
            m = number(tok[3], line_no);
            if (n > UINT32_MAX)
                fail(line_no, "vertex count too large");
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header)
                fail(line_no, "edge before 'p edge' header");
            if (tok.size() != 3)
                fail(line_no, "malformed edge line, expected 'e <u> <v>'");
            auto u = number(tok[1], line_no);
            auto v = number(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                fail(line_no, "vertex index out of range 1.." + std::to_string(n));
            if (u == v)
                fail(line_no, "self-loop at vertex " + std::to_string(u));
            auto a = static_cast<Vertex>(std::min(u, v) - 1);
            auto b = static_cast<Vertex>(std::max(u, v) - 1);
            if (!seen.insert({a, b}).second)
                fail(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.push_back({a, b});
        } else {
            fail(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header)
        throw InputError("missing 'p edge <n> <m>' header");
    if (edges.size() != m)
        throw InputError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                         " were given");
    return Graph::from_edges(n, edges);
}

auto emit_graph(const Graph &g) -> std::string
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

auto read_text_file(const std::filesystem::path &path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << text;
}

auto read_graph_file(const std::filesystem::path &path) -> Graph
{
    try {
        return parse_graph(read_text_file(path));
    } catch (const InputError &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_graph_file(const std::filesystem::path &path, const Graph &g) { write_text_file(path, emit_graph(g)); }

} // namespace gadgetforge
