#include "zf/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace zf {

namespace {

constexpr std::size_t kMaxGraph6Order = 62;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw FormatError("graph6: empty input");

    const int first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw FormatError("graph6: orders above 62 are not supported");
    if (first < 63 || first > 125)
        throw FormatError("graph6: bad header byte");
    const std::size_t n = static_cast<std::size_t>(first - 63);
    if (n > kMaxGraph6Order)
        throw FormatError("graph6: orders above 62 are not supported");

    const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - 1 != bytes)
        throw FormatError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                          std::to_string(text.size() - 1));

    std::vector<VertexSet> rows(n, VertexSet(n));
    std::size_t k = 0;
    for (std::size_t b = 0; b < bytes; ++b) {
        const int c = static_cast<unsigned char>(text[1 + b]);
        if (c < 63 || c > 126)
            throw FormatError("graph6: bad data byte");
        const int value = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++k) {
            const bool on = (value >> bit) & 1;
            if (k >= bits) {
                if (on)
                    throw FormatError("graph6: nonzero padding bits");
                continue;
            }
            if (!on)
                continue;
            // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
            std::size_t j = 1, base = 0;
            while (base + j <= k) {
                base += j;
                ++j;
            }
            const auto i = static_cast<VertexId>(k - base);
            rows[i].set(static_cast<VertexId>(j));
            rows[j].set(i);
        }
    }
    return Graph::from_adjacency(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxGraph6Order)
        throw BudgetError("graph6: order " + std::to_string(n) + " exceeds 62");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, filled = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled) {
        acc <<= 6 - filled;
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<long long> numbers;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string_view rest = trim(line);
        while (!rest.empty()) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
            if (ec != std::errc{} || value < 0)
                throw FormatError("edge list: bad integer on line " + std::to_string(line_no));
            rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
            rest = trim(rest);
            numbers.push_back(value);
        }
    }
    if (numbers.size() < 2)
        throw FormatError("edge list: missing \"n m\" header");
    const auto n = static_cast<std::size_t>(numbers[0]);
    const auto m = static_cast<std::size_t>(numbers[1]);
    if (numbers.size() != 2 + 2 * m)
        throw FormatError("edge list: expected " + std::to_string(m) + " edges");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        auto u = numbers[2 + 2 * e], v = numbers[3 + 2 * e];
        if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw InputError("edge list: vertex id out of range");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    return Graph::from_edge_list(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        os << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::string emit_label_table(const Graph& g) {
    std::ostringstream os;
    for (VertexId v = 0; v < g.order(); ++v)
        os << v << '\t' << g.label(v).str() << '\n';
    return os.str();
}

} // namespace zf
