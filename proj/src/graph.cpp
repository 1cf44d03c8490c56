#include "zf/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace zf {

namespace {

struct LabelPrinter {
    std::ostringstream& os;

    void operator()(const AtomLabel& a) const { os << a.family << '[' << a.index << ']'; }
    void operator()(const CoronaLabel& c) const {
        if (c.subscript.empty()) {
            os << "v_" << c.base_index;
            return;
        }
        os << "u^" << c.base_index << '_';
        for (std::size_t p = 0; p < c.subscript.size(); ++p)
            os << (p ? "." : "") << c.subscript[p];
    }
    void operator()(const PairLabel& p) const {
        os << '(' << (p.g ? p.g->str() : "?") << ',' << (p.h ? p.h->str() : "?") << ")#" << p.h_component;
    }
    void operator()(const SideLabel& s) const { os << (s.side == 0 ? "L:" : "R:") << (s.inner ? s.inner->str() : "?"); }
};

} // namespace

std::string VertexLabel::str() const {
    std::ostringstream os;
    std::visit(LabelPrinter{os}, value_);
    return os.str();
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for order " +
                             std::to_string(n));
        if (e.u == e.v)
            throw InputError("loop at vertex " + std::to_string(e.u));
        rows[e.u].set(e.v);
        rows[e.v].set(e.u);
    }
    return from_adjacency(std::move(rows));
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows, std::vector<VertexLabel> labels) {
    Graph g;
    g.adj_ = std::move(rows);
    std::size_t deg_sum = 0;
    for (const auto& r : g.adj_)
        deg_sum += r.count();
    g.edge_count_ = deg_sum / 2;
    if (!labels.empty() && labels.size() != g.adj_.size())
        throw InputError("label count does not match order");
    g.labels_ = std::move(labels);
    return g;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(order());
    for (std::size_t v = 0; v < order(); ++v)
        d[v] = adj_[v].count();
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
        adj_[u].for_each([&](VertexId v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

VertexLabel Graph::label(VertexId v) const {
    if (labels_.empty())
        return VertexLabel::atom("v", static_cast<int>(v));
    return labels_[v];
}

Graph Graph::with_labels(std::vector<VertexLabel> labels) const {
    if (labels.size() != order())
        throw InputError("label count does not match order");
    Graph g = *this;
    g.labels_ = std::move(labels);
    if (!g.check_invariants())
        throw InputError("vertex labels must be pairwise distinct");
    return g;
}

Graph Graph::without_labels() const {
    Graph g = *this;
    g.labels_.clear();
    return g;
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
    const std::size_t m = vertices.size();
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (adjacent(vertices[i], vertices[j])) {
                rows[i].set(static_cast<VertexId>(j));
                rows[j].set(static_cast<VertexId>(i));
            }
    std::vector<VertexLabel> labels;
    if (has_labels())
        for (auto v : vertices)
            labels.push_back(labels_[v]);
    return from_adjacency(std::move(rows), std::move(labels));
}

std::vector<std::uint64_t> Graph::masks() const {
    if (order() > 64)
        throw BudgetError("word adjacency needs order <= 64");
    std::vector<std::uint64_t> m(order(), 0);
    for (std::size_t v = 0; v < order(); ++v)
        m[v] = order() ? adj_[v].words()[0] : 0;
    return m;
}

bool Graph::check_invariants() const {
    for (VertexId u = 0; u < order(); ++u) {
        if (adj_[u].universe() != order() || adj_[u].test(u))
            return false;
        bool sym = true;
        adj_[u].for_each([&](VertexId v) { sym = sym && adj_[v].test(u); });
        if (!sym)
            return false;
    }
    if (!labels_.empty()) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l.str()).second)
                return false;
    }
    return true;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> blocks;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        std::deque<VertexId> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            blocks.back().push_back(u);
            g.neighbors(u).for_each([&](VertexId v) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
            });
        }
        std::sort(blocks.back().begin(), blocks.back().end());
    }
    return blocks;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexId> isolated_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.neighbors(v).none())
            out.push_back(v);
    return out;
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
    const std::size_t n1 = g.order(), n = g.order() + h.order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& e : g.edges()) {
        rows[e.u].set(e.v);
        rows[e.v].set(e.u);
    }
    for (const auto& e : h.edges()) {
        auto u = static_cast<VertexId>(e.u + n1), v = static_cast<VertexId>(e.v + n1);
        rows[u].set(v);
        rows[v].set(u);
    }
    if (cross)
        for (VertexId u = 0; u < n1; ++u)
            for (VertexId v = static_cast<VertexId>(n1); v < n; ++v) {
                rows[u].set(v);
                rows[v].set(u);
            }
    std::vector<VertexLabel> labels;
    labels.reserve(n);
    for (VertexId v = 0; v < g.order(); ++v)
        labels.emplace_back(SideLabel{0, share(g.label(v))});
    for (VertexId v = 0; v < h.order(); ++v)
        labels.emplace_back(SideLabel{1, share(h.label(v))});
    return Graph::from_adjacency(std::move(rows), std::move(labels));
}

} // namespace

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }
Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::vector<VertexId> queue(n);
    for (VertexId s = 0; s < n; ++s) {
        auto& d = dist[s];
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        d[s] = 0;
        while (head < tail) {
            VertexId u = queue[head++];
            g.neighbors(u).for_each([&](VertexId v) {
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    queue[tail++] = v;
                }
            });
        }
    }
    return dist;
}

} // namespace zf
