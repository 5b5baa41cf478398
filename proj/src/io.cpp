#include "interlace/io.hpp"

#include <fstream>
#include <sstream>

#include "interlace/error.hpp"

namespace interlace {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::size_t parse_nat(const Line& line, const std::string& tok, std::size_t bound,
                      const char* what) {
    std::size_t value = 0;
    if (tok.empty()) fail(line.number, std::string("missing ") + what);
    for (char c : tok) {
        if (c < '0' || c > '9') fail(line.number, std::string("bad ") + what + " '" + tok + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 1000000) fail(line.number, std::string(what) + " out of range");
    }
    if (bound && value >= bound)
        fail(line.number, std::string(what) + " " + tok + " out of range (expected < " +
                              std::to_string(bound) + ")");
    return value;
}

std::pair<std::size_t, std::vector<Line>> parse_header(const std::string& text,
                                                       const std::string& keyword) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("line 1: empty input");
    const Line& head = lines.front();
    if (head.tokens[0] != keyword)
        fail(head.number, "expected header '" + keyword + "', found '" + head.tokens[0] + "'");
    if (head.tokens.size() != 2) fail(head.number, "header needs exactly one count");
    std::size_t n = parse_nat(head, head.tokens[1], 0, "vertex count");
    lines.erase(lines.begin());
    return {n, std::move(lines)};
}

}  // namespace

InputKind sniff_kind(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("line 1: empty input");
    const std::string& kw = lines.front().tokens[0];
    if (kw == "graph") return InputKind::Graph;
    if (kw == "digraph4") return InputKind::Digraph4;
    if (kw == "graph4") return InputKind::Graph4;
    if (kw == "plane") return InputKind::Plane;
    if (kw == "setsystem") return InputKind::SetSystem;
    fail(lines.front().number, "unknown header '" + kw + "'");
}

Graph parse_graph(const std::string& text) {
    auto [n, lines] = parse_header(text, "graph");
    Graph g(n);
    for (const Line& line : lines) {
        if (line.tokens[0] != "e" || line.tokens.size() != 3)
            fail(line.number, "expected 'e <u> <v>'");
        std::size_t u = parse_nat(line, line.tokens[1], n, "vertex");
        std::size_t v = parse_nat(line, line.tokens[2], n, "vertex");
        if (u != v && g.has_edge(u, v)) fail(line.number, "duplicate edge");
        if (u == v && g.looped(u)) fail(line.number, "duplicate loop");
        g.add_edge(u, v);
    }
    return g;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> parse_pair_lines(
    const std::vector<Line>& lines, std::size_t n, const char* tag, const char* shape) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Line& line : lines) {
        if (line.tokens[0] != tag || line.tokens.size() != 3) fail(line.number, shape);
        out.emplace_back(parse_nat(line, line.tokens[1], n, "vertex"),
                         parse_nat(line, line.tokens[2], n, "vertex"));
    }
    return out;
}

}  // namespace

TwoInTwoOutDigraph parse_digraph4(const std::string& text) {
    auto [n, lines] = parse_header(text, "digraph4");
    return TwoInTwoOutDigraph::from_arcs(
        n, parse_pair_lines(lines, n, "a", "expected 'a <u> <v>'"));
}

FourRegularGraph parse_graph4(const std::string& text) {
    auto [n, lines] = parse_header(text, "graph4");
    return FourRegularGraph::from_edges(
        n, parse_pair_lines(lines, n, "e", "expected 'e <u> <v>'"));
}

PlaneGraph parse_plane(const std::string& text) {
    auto [n, lines] = parse_header(text, "plane");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<uint32_t>> rotation(n);
    std::vector<bool> rotated(n, false);
    for (const Line& line : lines) {
        if (line.tokens[0] == "e") {
            if (line.tokens.size() != 4) fail(line.number, "expected 'e <id> <u> <v>'");
            std::size_t id = parse_nat(line, line.tokens[1], 0, "edge id");
            if (id != edges.size()) fail(line.number, "edge ids must appear in order from 0");
            edges.emplace_back(parse_nat(line, line.tokens[2], n, "vertex"),
                               parse_nat(line, line.tokens[3], n, "vertex"));
        } else if (line.tokens[0] == "rot") {
            if (line.tokens.size() < 2) fail(line.number, "expected 'rot <v> <id:end>...'");
            std::size_t v = parse_nat(line, line.tokens[1], n, "vertex");
            if (rotated[v]) fail(line.number, "duplicate rotation for vertex");
            rotated[v] = true;
            for (std::size_t i = 2; i < line.tokens.size(); ++i) {
                const std::string& tok = line.tokens[i];
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    fail(line.number, "edge end must look like <id:end>");
                std::size_t id = parse_nat(line, tok.substr(0, colon), edges.size(), "edge id");
                std::size_t side = parse_nat(line, tok.substr(colon + 1), 2, "edge end");
                rotation[v].push_back(static_cast<uint32_t>(2 * id + side));
            }
        } else {
            fail(line.number, "expected 'e' or 'rot'");
        }
    }
    try {
        return PlaneGraph(n, std::move(edges), std::move(rotation));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("plane validation: ") + e.what());
    }
}

SetSystem parse_setsystem(const std::string& text) {
    auto [n, lines] = parse_header(text, "setsystem");
    std::vector<uint64_t> fam;
    for (const Line& line : lines) {
        if (line.tokens[0] != "f") fail(line.number, "expected 'f <elements...>'");
        uint64_t mask = 0;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            mask |= uint64_t{1} << parse_nat(line, line.tokens[i], n, "element");
        fam.push_back(mask);
    }
    return SetSystem::with_numbered_ground(n, std::move(fam));
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph " << g.order() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << "\n";
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.looped(v)) os << "e " << v << ' ' << v << "\n";
    return os.str();
}

std::string write_setsystem(const SetSystem& s) {
    std::ostringstream os;
    os << "setsystem " << s.ground_size() << "\n";
    for (uint64_t f : s.feasible()) {
        os << "f";
        for (std::size_t e = 0; e < s.ground_size(); ++e)
            if ((f >> e) & 1) os << ' ' << e;
        os << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace interlace
