#include "ramseykit/graph6.hpp"

#include <istream>
#include <sstream>

namespace rk {

namespace {

constexpr int kMaxOrder = 258047; // largest order the 4-byte header carries

void append_bits(std::string& out, int& bitpos, bool bit) {
    if (bitpos % 6 == 0) out.push_back(char(63));
    if (bit) out.back() += char(1 << (5 - bitpos % 6));
    ++bitpos;
}

} // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > kMaxOrder)
        throw codec_error("order " + std::to_string(n) +
                          " not supported by graph6 (max 258047)");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int bitpos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) append_bits(out, bitpos, g.has_edge(u, v));
    return out;
}

Graph from_graph6(const std::string& s) {
    std::size_t i = 0;
    long n;
    if (s.empty()) throw codec_error("empty graph6 record");
    for (char c : s)
        if (c < 63 || c > 126)
            throw codec_error("graph6 byte out of printable range");
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw codec_error("graph6 orders above 258047 not supported");
        if (s.size() < 4) throw codec_error("truncated graph6 header");
        n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        if (n <= 62)
            throw codec_error("non-canonical graph6 header (long form for small order)");
        i = 4;
    } else {
        n = s[0] - 63;
        i = 1;
    }
    long bits = n * (n - 1) / 2;
    long payload = (bits + 5) / 6;
    if ((long)s.size() - (long)i != payload)
        throw codec_error("graph6 payload length mismatch: expected " +
                          std::to_string(payload) + " chars, got " +
                          std::to_string((long)s.size() - (long)i));
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((s[i + bit / 6] - 63) >> (5 - bit % 6) & 1)
                edges.emplace_back(u, v);
    // padding bits must be zero
    for (long b = bits; b < payload * 6; ++b)
        if ((s[i + b / 6] - 63) >> (5 - b % 6) & 1)
            throw codec_error("nonzero padding bits in graph6 payload");
    return Graph((int)n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& block) {
    std::istringstream in(block);
    long n, m;
    if (!(in >> n >> m)) throw codec_error("edge list: bad header line");
    if (n < 0 || m < 0) throw codec_error("edge list: negative counts");
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v))
            throw codec_error("edge list: expected " + std::to_string(m) +
                              " edges, got " + std::to_string(i));
        edges.emplace_back((int)u, (int)v);
    }
    try {
        return Graph((int)n, edges);
    } catch (const error& e) {
        throw codec_error(std::string("edge list: ") + e.what());
    }
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (v < (int)labels.size() && !labels[v].empty())
            out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

CorpusStream::CorpusStream(std::istream& in, CorpusFormat format, bool strict)
    : in_(in), format_(format), strict_(strict) {}

std::optional<Graph> CorpusStream::next() {
    return format_ == CorpusFormat::graph6 ? next_graph6() : next_edge_list();
}

std::optional<Graph> CorpusStream::next_graph6() {
    std::string s;
    while (std::getline(in_, s)) {
        ++line_;
        if (!s.empty() && s.back() == '\r') s.pop_back();
        if (s.empty()) continue;
        if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
        if (s.empty()) continue;
        try {
            Graph g = from_graph6(s);
            ++records_;
            return g;
        } catch (const codec_error& e) {
            if (strict_) throw codec_error(e.what(), line_);
            diags_.push_back({line_, e.what()});
        }
    }
    return std::nullopt;
}

std::optional<Graph> CorpusStream::next_edge_list() {
    std::string s;
    while (std::getline(in_, s)) {
        ++line_;
        if (!s.empty() && s.back() == '\r') s.pop_back();
        if (s.empty() || s[0] == '#') continue;
        long header_line = line_;
        std::istringstream head(s);
        long n, m;
        if (!(head >> n >> m) || n < 0 || m < 0) {
            if (strict_) throw codec_error("edge list: bad header line", line_);
            diags_.push_back({line_, "edge list: bad header line"});
            continue;
        }
        std::ostringstream block;
        block << n << ' ' << m << '\n';
        long got = 0;
        while (got < m && std::getline(in_, s)) {
            ++line_;
            if (!s.empty() && s.back() == '\r') s.pop_back();
            if (s.empty() || s[0] == '#') continue;
            block << s << '\n';
            ++got;
        }
        try {
            Graph g = from_edge_list(block.str());
            ++records_;
            return g;
        } catch (const codec_error& e) {
            if (strict_) throw codec_error(e.what(), header_line);
            diags_.push_back({header_line, e.what()});
        }
    }
    return std::nullopt;
}

} // namespace rk
