#include "zf/products.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace zf {

std::size_t corona_order(std::size_t n1, std::size_t n2, int k) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    std::size_t order = n1;
    for (int l = 0; l < k; ++l) {
        if (order > kMax / (n2 + 1))
            return kMax;
        order *= n2 + 1;
    }
    return order;
}

std::optional<VertexId> CoronaGraph::root_of(VertexId v) const {
    if (depth_of_[v] == 0)
        return std::nullopt;
    return copies_[static_cast<std::size_t>(copy_index_of_[v])].root;
}

const CoronaCopy& CoronaGraph::copy_containing(VertexId v) const {
    if (v >= graph_.order() || copy_index_of_[v] < 0)
        throw InputError("vertex " + std::to_string(v) + " is not a copy vertex");
    return copies_[static_cast<std::size_t>(copy_index_of_[v])];
}

std::vector<const CoronaCopy*> CoronaGraph::copies_at(int level) const {
    std::vector<const CoronaCopy*> out;
    for (const auto& c : copies_)
        if (c.level == level)
            out.push_back(&c);
    return out;
}

const CoronaCopy& CoronaGraph::copy(int level, int base_index, std::span<const int> root_address) const {
    if (level < 1 || level > depth_)
        throw InputError("corona level " + std::to_string(level) + " outside 1.." + std::to_string(depth_));
    if (root_address.size() != static_cast<std::size_t>(level - 1))
        throw InputError("copy address at level " + std::to_string(level) + " needs " + std::to_string(level - 1) +
                         " root digits");
    for (const auto& c : copies_)
        if (c.level == level && c.base_index == base_index &&
            std::equal(c.root_address.begin(), c.root_address.end(), root_address.begin(), root_address.end()))
            return c;
    throw InputError("no copy with that address");
}

const CoronaCopy& CoronaGraph::copy_of_root(VertexId root, int level) const {
    if (root >= graph_.order())
        throw InputError("root out of range");
    const int offset = level - depth_of_[root] - 1;
    const auto& list = root_copies_[root];
    if (offset < 0 || static_cast<std::size_t>(offset) >= list.size())
        throw InputError("no copy at that level for this root");
    return copies_[static_cast<std::size_t>(list[static_cast<std::size_t>(offset)])];
}

std::vector<VertexId> CoronaGraph::base_vertices() const {
    std::vector<VertexId> out(base_order_);
    for (std::size_t v = 0; v < base_order_; ++v)
        out[v] = static_cast<VertexId>(v);
    return out;
}

std::vector<VertexId> CoronaGraph::copy_vertices() const {
    std::vector<VertexId> out;
    for (auto v = static_cast<VertexId>(base_order_); v < graph_.order(); ++v)
        out.push_back(v);
    return out;
}

CoronaGraph corona(const Graph& g, const Graph& h, std::size_t cap) { return iterated_corona(g, h, 1, cap); }

CoronaGraph iterated_corona(const Graph& g, const Graph& h, int k, std::size_t cap) {
    if (g.order() == 0 || h.order() == 0)
        throw InputError("corona factors must be non-empty");
    if (k < 0)
        throw InputError("corona depth must be >= 0");
    const std::size_t n1 = g.order(), n2 = h.order();
    const std::size_t total = corona_order(n1, n2, k);
    if (total > cap)
        throw BudgetError("corona order " + (total == std::numeric_limits<std::size_t>::max() ? std::string("overflow")
                                                                                               : std::to_string(total)) +
                          " exceeds construction cap " + std::to_string(cap));

    CoronaGraph cg;
    cg.base_order_ = n1;
    cg.attach_order_ = n2;
    cg.depth_ = k;
    cg.depth_of_.assign(total, 0);
    cg.within_.assign(total, -1);
    cg.copy_index_of_.assign(total, -1);
    cg.root_copies_.assign(total, {});

    std::vector<VertexSet> rows(total, VertexSet(total));
    std::vector<VertexLabel> labels;
    labels.reserve(total);
    std::vector<std::vector<int>> subscript(total);
    std::vector<int> base(total, 0);

    for (const auto& e : g.edges()) {
        rows[e.u].set(e.v);
        rows[e.v].set(e.u);
    }
    for (VertexId v = 0; v < n1; ++v) {
        base[v] = static_cast<int>(v) + 1;
        labels.emplace_back(CoronaLabel{share(g.label(v)), base[v], {}});
    }

    const auto h_edges = h.edges();
    std::size_t next = n1;
    for (int level = 1; level <= k; ++level) {
        const std::size_t prev = next;
        for (VertexId r = 0; r < prev; ++r) {
            CoronaCopy copy;
            copy.level = level;
            copy.root = r;
            copy.base_index = base[r];
            copy.root_address = subscript[r];
            copy.root_address.resize(static_cast<std::size_t>(level - 1), static_cast<int>(n2) + 1);
            const int copy_idx = static_cast<int>(cg.copies_.size());
            cg.root_copies_[r].push_back(copy_idx);
            for (std::size_t j = 0; j < n2; ++j) {
                const auto v = static_cast<VertexId>(next++);
                copy.vertices.push_back(v);
                rows[v].set(r);
                rows[r].set(v);
                cg.depth_of_[v] = level;
                cg.within_[v] = static_cast<int>(j);
                cg.copy_index_of_[v] = copy_idx;
                base[v] = base[r];
                subscript[v].push_back(static_cast<int>(j) + 1);
                subscript[v].insert(subscript[v].end(), copy.root_address.begin(), copy.root_address.end());
                labels.emplace_back(CoronaLabel{labels[static_cast<std::size_t>(base[r] - 1)].as<CoronaLabel>()->base,
                                                base[v], subscript[v]});
            }
            for (const auto& e : h_edges) {
                auto u = copy.vertices[e.u], v = copy.vertices[e.v];
                rows[u].set(v);
                rows[v].set(u);
            }
            cg.copies_.push_back(std::move(copy));
        }
    }
    cg.graph_ = Graph::from_adjacency(std::move(rows), std::move(labels));
    return cg;
}

std::vector<VertexId> LexGraph::layer(VertexId a) const {
    if (a >= g_order_)
        throw InputError("G vertex " + std::to_string(a) + " out of range");
    std::vector<VertexId> out(h_order_);
    for (VertexId v = 0; v < h_order_; ++v)
        out[v] = id(a, v);
    return out;
}

std::vector<VertexId> LexGraph::layer_component(VertexId a, int i) const {
    if (a >= g_order_ || i < 0 || static_cast<std::size_t>(i) >= components_.size())
        throw InputError("bad layer component");
    std::vector<VertexId> out;
    for (auto v : components_[static_cast<std::size_t>(i)])
        out.push_back(id(a, v));
    return out;
}

std::vector<VertexId> LexGraph::column(VertexId v) const {
    if (v >= h_order_)
        throw InputError("H vertex " + std::to_string(v) + " out of range");
    std::vector<VertexId> out(g_order_);
    for (VertexId a = 0; a < g_order_; ++a)
        out[a] = id(a, v);
    return out;
}

std::vector<VertexId> LexGraph::project(std::span<const VertexId> s, Side side) const {
    std::vector<VertexId> out;
    for (auto x : s)
        out.push_back(side == Side::G ? g_part(x) : h_part(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LexGraph lexicographic(const Graph& g, const Graph& h, std::size_t cap) {
    if (g.order() == 0 || h.order() == 0)
        throw InputError("lexicographic factors must be non-empty");
    const std::size_t n = g.order(), m = h.order();
    if (n > cap / m)
        throw BudgetError("lexicographic order " + std::to_string(n * m) + " exceeds construction cap " +
                          std::to_string(cap));
    LexGraph lg;
    lg.g_order_ = n;
    lg.h_order_ = m;
    lg.h_component_.assign(m, 0);
    lg.components_ = connected_components(h);
    for (std::size_t i = 0; i < lg.components_.size(); ++i) {
        lg.component_sizes_.push_back(lg.components_[i].size());
        for (auto v : lg.components_[i])
            lg.h_component_[v] = static_cast<int>(i);
    }

    const std::size_t total = n * m;
    std::vector<VertexSet> rows(total, VertexSet(total));
    std::vector<VertexLabel> labels;
    labels.reserve(total);
    for (VertexId a = 0; a < n; ++a) {
        VertexSet across(total);
        g.neighbors(a).for_each([&](VertexId b) {
            for (VertexId w = 0; w < m; ++w)
                across.set(lg.id(b, w));
        });
        auto g_label = share(g.label(a));
        for (VertexId v = 0; v < m; ++v) {
            auto& row = rows[lg.id(a, v)];
            row |= across;
            h.neighbors(v).for_each([&](VertexId w) { row.set(lg.id(a, w)); });
            labels.emplace_back(PairLabel{g_label, share(h.label(v)), lg.h_component_[v] + 1});
        }
    }
    lg.graph_ = Graph::from_adjacency(std::move(rows), std::move(labels));
    return lg;
}

} // namespace zf
