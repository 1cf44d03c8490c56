#include "zf/families.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "zf/graph_io.hpp"

namespace zf {

namespace {

Graph labeled(std::size_t n, const std::vector<Edge>& edges, const std::string& family) {
    std::vector<VertexLabel> labels;
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        labels.push_back(VertexLabel::atom(family, static_cast<int>(v)));
    return Graph::from_edge_list(n, edges).with_labels(std::move(labels));
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw InputError(what);
}

std::vector<int> parse_ints(std::string_view s, std::string_view spec) {
    std::vector<int> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        auto tok = s.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InputError("bad integer in family spec \"" + std::string(spec) + "\"");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::size_t single(const FamilySpec& spec) {
    require(spec.params.size() == 1, "family \"" + spec.name + "\" takes exactly one integer");
    require(spec.params[0] >= 0, "family \"" + spec.name + "\" order must be non-negative");
    return static_cast<std::size_t>(spec.params[0]);
}

} // namespace

Graph path(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (VertexId v = 0; v + 1 < n; ++v)
        e.push_back({v, v + 1});
    return labeled(n, e, "path");
}

Graph cycle(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (VertexId v = 0; v < n; ++v)
        e.push_back({v, static_cast<VertexId>((v + 1) % n)});
    return labeled(n, e, "cycle");
}

Graph complete(std::size_t n) {
    require(n >= 1, "complete needs n >= 1");
    std::vector<Edge> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            e.push_back({u, v});
    return labeled(n, e, "complete");
}

Graph empty(std::size_t n) {
    require(n >= 1, "empty needs n >= 1");
    return labeled(n, {}, "empty");
}

Graph star(std::size_t n) {
    require(n >= 2, "star needs n >= 2");
    std::vector<Edge> e;
    for (VertexId v = 1; v < n; ++v)
        e.push_back({0, v});
    return labeled(n, e, "star");
}

Graph wheel(std::size_t n) {
    require(n >= 3, "wheel needs n >= 3");
    auto g = join(complete(1), cycle(n));
    std::vector<VertexLabel> labels;
    for (std::size_t v = 0; v <= n; ++v)
        labels.push_back(VertexLabel::atom("wheel", static_cast<int>(v)));
    return g.with_labels(std::move(labels));
}

Graph fan(std::size_t n) {
    require(n >= 2, "fan needs n >= 2");
    auto g = join(complete(1), path(n));
    std::vector<VertexLabel> labels;
    for (std::size_t v = 0; v <= n; ++v)
        labels.push_back(VertexLabel::atom("fan", static_cast<int>(v)));
    return g.with_labels(std::move(labels));
}

Graph tree_from_pruefer(std::span<const int> code) {
    const std::size_t n = code.size() + 2;
    std::vector<int> degree(n, 1);
    for (int c : code) {
        require(c >= 0 && static_cast<std::size_t>(c) < n,
                "Pruefer entry " + std::to_string(c) + " out of range for n=" + std::to_string(n));
        ++degree[static_cast<std::size_t>(c)];
    }
    std::set<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        VertexId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        auto parent = static_cast<VertexId>(c);
        edges.push_back({std::min(leaf, parent), std::max(leaf, parent)});
        if (--degree[parent] == 1)
            leaves.insert(parent);
    }
    VertexId a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return labeled(n, edges, "tree");
}

std::string FamilySpec::str() const {
    if (name == "union") {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "+" : "") + parts[i].str();
        return s;
    }
    if (name == "g6")
        return "g6:" + code;
    std::string s = name + ":";
    for (std::size_t i = 0; i < params.size(); ++i)
        s += (i ? "," : "") + std::to_string(params[i]);
    return s;
}

FamilySpec parse_family_spec(std::string_view text) {
    if (text.find('+') != std::string_view::npos) {
        FamilySpec u;
        u.name = "union";
        while (true) {
            auto plus = text.find('+');
            u.parts.push_back(parse_family_spec(text.substr(0, plus)));
            if (plus == std::string_view::npos)
                break;
            text.remove_prefix(plus + 1);
        }
        return u;
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("family spec \"" + std::string(text) + "\" must look like name:params");
    FamilySpec spec;
    spec.name = std::string(text.substr(0, colon));
    auto rest = text.substr(colon + 1);
    if (spec.name == "pruefer-tree")
        spec.name = "pruefer";
    if (spec.name == "g6") {
        spec.code = std::string(rest);
        return spec;
    }
    static const std::set<std::string> known{"path", "cycle", "complete", "empty", "star", "wheel", "fan", "pruefer"};
    if (!known.contains(spec.name))
        throw InputError("unknown family \"" + spec.name + "\"");
    spec.params = parse_ints(rest, text);
    return spec;
}

Graph make_graph(const FamilySpec& spec) {
    const auto& n = spec.name;
    if (n == "union") {
        require(!spec.parts.empty(), "empty union");
        Graph g = make_graph(spec.parts[0]);
        for (std::size_t i = 1; i < spec.parts.size(); ++i) {
            Graph next = disjoint_union(g, make_graph(spec.parts[i]));
            std::vector<VertexLabel> labels;
            for (std::size_t v = 0; v < next.order(); ++v)
                labels.push_back(VertexLabel::atom("union", static_cast<int>(v)));
            g = next.with_labels(std::move(labels));
        }
        return g;
    }
    if (n == "g6")
        return parse_graph6(spec.code);
    if (n == "pruefer") {
        for (int c : spec.params)
            require(c >= 0, "negative Pruefer entry");
        return tree_from_pruefer(spec.params);
    }
    const std::size_t k = single(spec);
    if (n == "path")
        return path(k);
    if (n == "cycle")
        return cycle(k);
    if (n == "complete")
        return complete(k);
    if (n == "empty")
        return empty(k);
    if (n == "star")
        return star(k);
    if (n == "wheel")
        return wheel(k);
    if (n == "fan")
        return fan(k);
    throw InputError("unknown family \"" + n + "\"");
}

void for_each_pruefer_code(std::size_t n, const std::function<void(std::span<const int>)>& visit) {
    require(n >= 2, "trees need n >= 2");
    std::vector<int> code(n - 2, 0);
    while (true) {
        visit(code);
        std::size_t p = code.size();
        while (p > 0 && code[p - 1] == static_cast<int>(n) - 1)
            code[--p] = 0;
        if (p == 0)
            return;
        ++code[p - 1];
    }
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
    require(n >= 1 && n <= 8, "connected-graph enumeration supports 1 <= n <= 8");
    std::vector<Edge> slots;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i)
            slots.push_back({i, j});
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n)
            continue;
        edges.clear();
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1U)
                edges.push_back(slots[b]);
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g))
            visit(g);
    }
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

bool is_path_graph(const Graph& g) {
    if (!is_tree(g))
        return false;
    for (auto d : g.degrees())
        if (d > 2)
            return false;
    return true;
}

bool is_complete_graph(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - (g.order() ? 1 : 0)); }

bool is_edgeless(const Graph& g) { return g.size() == 0; }

namespace {

std::string ahu(const Graph& t, VertexId root, VertexId parent) {
    std::vector<std::string> kids;
    t.neighbors(root).for_each([&](VertexId c) {
        if (c != parent)
            kids.push_back(ahu(t, c, root));
    });
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids)
        s += k;
    return s + ")";
}

} // namespace

std::string tree_shape_key(const Graph& tree) {
    require(is_tree(tree), "tree_shape_key needs a tree");
    const std::size_t n = tree.order();
    std::vector<std::size_t> deg = tree.degrees();
    std::vector<bool> removed(n, false);
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] <= 1)
            layer.push_back(v);
    std::size_t left = n;
    while (left > 2) {
        std::vector<VertexId> next;
        for (auto v : layer) {
            removed[v] = true;
            --left;
            tree.neighbors(v).for_each([&](VertexId u) {
                if (!removed[u] && --deg[u] == 1)
                    next.push_back(u);
            });
        }
        layer = std::move(next);
    }
    std::string best;
    for (VertexId v = 0; v < n; ++v)
        if (!removed[v]) {
            auto code = ahu(tree, v, static_cast<VertexId>(n));
            if (best.empty() || code < best)
                best = code;
        }
    return best;
}

} // namespace zf
