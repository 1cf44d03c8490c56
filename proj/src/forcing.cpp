#include "zf/forcing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
#endif

namespace zf {

ForceTrace closure(const Graph& g, std::span<const VertexId> initial) {
    const std::size_t n = g.order();
    ForceTrace t;
    VertexSet black(n, initial);
    t.initial = black.to_vector();

    std::vector<std::size_t> white_count(n);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        white_count[v] = g.neighbors(v).count_not_in(black, n);
        if (black.test(v) && white_count[v] == 1)
            ready.push(v);
    }
    while (!ready.empty()) {
        const VertexId u = ready.top();
        ready.pop();
        if (white_count[u] != 1)
            continue; // stale: its last white neighbor was forced by someone else
        const auto w = static_cast<VertexId>(g.neighbors(u).first_not_in(black));
        black.set(w);
        t.forces.push_back({u, w});
        g.neighbors(w).for_each([&](VertexId x) {
            if (--white_count[x] == 1 && black.test(x))
                ready.push(x);
        });
        if (white_count[w] == 1)
            ready.push(w);
    }
    t.final_set = black.to_vector();
    return t;
}

VertexSet closure_set(const Graph& g, const VertexSet& initial) {
    const std::size_t n = g.order();
    VertexSet black = initial;
    std::vector<std::size_t> white_count(n);
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v) {
        white_count[v] = g.neighbors(v).count_not_in(black, n);
        if (black.test(v) && white_count[v] == 1)
            ready.push_back(v);
    }
    while (!ready.empty()) {
        const VertexId u = ready.back();
        ready.pop_back();
        if (white_count[u] != 1)
            continue;
        const auto w = static_cast<VertexId>(g.neighbors(u).first_not_in(black));
        black.set(w);
        g.neighbors(w).for_each([&](VertexId x) {
            if (--white_count[x] == 1 && black.test(x))
                ready.push_back(x);
        });
        if (white_count[w] == 1)
            ready.push_back(w);
    }
    return black;
}

bool is_zero_forcing_set(const Graph& g, std::span<const VertexId> s) {
    for (auto v : s)
        if (v >= g.order())
            throw InputError("vertex " + std::to_string(v) + " out of range");
    return closure_set(g, VertexSet(g.order(), s)).all();
}

std::uint64_t closure_mask(std::span<const std::uint64_t> adj, std::uint64_t black) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::uint64_t todo = black;
        while (todo) {
            const int v = std::countr_zero(todo);
            todo &= todo - 1;
            const std::uint64_t white = adj[static_cast<std::size_t>(v)] & ~black;
            if (white && !(white & (white - 1))) {
                black |= white;
                changed = true;
            }
        }
    }
    return black;
}

TraceCheck verify_trace(const Graph& g, const ForceTrace& t) {
    const std::size_t n = g.order();
    for (auto v : t.initial)
        if (v >= n)
            return {false, 0};
    VertexSet black(n, t.initial);
    for (std::size_t i = 0; i < t.forces.size(); ++i) {
        const auto [u, w] = t.forces[i];
        if (u >= n || w >= n || !black.test(u) || black.test(w) || !g.adjacent(u, w))
            return {false, i};
        if (g.neighbors(u).count_not_in(black, 2) != 1)
            return {false, i};
        black.set(w);
    }
    for (auto v : t.final_set)
        if (v >= n)
            return {false, t.forces.size()};
    if (VertexSet(n, t.final_set) != black)
        return {false, t.forces.size()};
    return {true, std::nullopt};
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

// Combination of `k` indices out of `m` at lexicographic rank `rank`.
void unrank(std::uint64_t rank, std::size_t m, std::size_t k, std::vector<int>& out) {
    out.resize(k);
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            const std::uint64_t c = binomial(m - x - 1, k - i - 1);
            if (rank < c)
                break;
            rank -= c;
            ++x;
        }
        out[i] = static_cast<int>(x++);
    }
}

bool next_combination(std::vector<int>& c, std::size_t m) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == static_cast<int>(m - k + i - 1))
        --i;
    if (i == 0)
        return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j)
        c[j] = c[j - 1] + 1;
    return true;
}

// The search problem after fixing the vertices every candidate must hold.
struct SearchSpace {
    std::vector<std::uint64_t> adj;
    std::uint64_t required = 0;
    std::uint64_t full = 0;
    std::vector<VertexId> pool; // sorted, disjoint from required
    std::size_t lower = 0;      // smallest free-part size worth trying

    std::uint64_t mask_of(const std::vector<int>& combo) const {
        std::uint64_t m = required;
        for (int i : combo)
            m |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
        return m;
    }
    bool forces(std::uint64_t black) const { return closure_mask(adj, black) == full; }
};

struct LevelHit {
    std::uint64_t rank = 0;
    std::vector<int> combo;
};

bool expired(const SolveOptions& opts) {
    return opts.deadline && std::chrono::steady_clock::now() > *opts.deadline;
}

std::optional<LevelHit> search_level_serial(const SearchSpace& sp, std::size_t s, const SolveOptions& opts) {
    const std::size_t m = sp.pool.size();
    if (s > m)
        return std::nullopt;
    std::vector<int> combo(s);
    for (std::size_t i = 0; i < s; ++i)
        combo[i] = static_cast<int>(i);
    std::uint64_t rank = 0;
    do {
        if ((rank & 1023U) == 1023U && expired(opts))
            throw Timeout("exact search exceeded its time limit");
        if (sp.forces(sp.mask_of(combo)))
            return LevelHit{rank, combo};
        ++rank;
    } while (next_combination(combo, m));
    return std::nullopt;
}

std::optional<LevelHit> search_level_parallel(const SearchSpace& sp, std::size_t s, const SolveOptions& opts) {
    const std::size_t m = sp.pool.size();
    if (s > m)
        return std::nullopt;
    const std::uint64_t total = binomial(m, s);
    constexpr std::uint64_t kChunk = 2048;
    if (total <= kChunk)
        return search_level_serial(sp, s, opts);
    const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
    std::atomic<std::uint64_t> best{total};
    std::atomic<bool> timed_out{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads > 0 ? opts.threads : omp_get_max_threads())
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
        const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kChunk;
        if (begin >= best.load(std::memory_order_relaxed) || timed_out.load(std::memory_order_relaxed))
            continue;
        if (expired(opts)) {
            timed_out.store(true);
            continue;
        }
        const std::uint64_t end = std::min(total, begin + kChunk);
        std::vector<int> combo;
        unrank(begin, m, s, combo);
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            if (rank >= best.load(std::memory_order_relaxed))
                break;
            if (sp.forces(sp.mask_of(combo))) {
                std::uint64_t cur = best.load();
                while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                }
                break;
            }
            next_combination(combo, m);
        }
    }
    if (timed_out.load())
        throw Timeout("exact search exceeded its time limit");
    if (best.load() == total)
        return std::nullopt;
    LevelHit hit;
    hit.rank = best.load();
    unrank(hit.rank, m, s, hit.combo);
    return hit;
}

// Builds the search space; nullopt when no subset of pool can force.
std::optional<SearchSpace> make_space(const Graph& g, std::span<const VertexId> pool,
                                      std::span<const VertexId> required, const SolveOptions& opts) {
    const std::size_t n = g.order();
    if (n == 0)
        throw InputError("exact solver needs a non-empty graph");
    if (n > opts.cap)
        throw BudgetError("order " + std::to_string(n) + " exceeds exact-solve cap " + std::to_string(opts.cap));
    if (n > 64)
        throw BudgetError("exact solver supports at most 64 vertices");

    SearchSpace sp;
    sp.adj = g.masks();
    sp.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t allowed = 0;
    for (auto v : pool) {
        if (v >= n)
            throw InputError("pool vertex out of range");
        allowed |= std::uint64_t{1} << v;
    }
    for (auto v : required) {
        if (v >= n)
            throw InputError("required vertex out of range");
        sp.required |= std::uint64_t{1} << v;
    }
    // Isolated vertices can never be forced.
    for (auto v : isolated_vertices(g)) {
        const auto bit = std::uint64_t{1} << v;
        if (!((allowed | sp.required) & bit))
            return std::nullopt;
        sp.required |= bit;
    }
    allowed &= ~sp.required;
    for (VertexId v = 0; v < n; ++v)
        if ((allowed >> v) & 1U)
            sp.pool.push_back(v);
    // Each component with an edge needs a black vertex of its own.
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        std::uint64_t cm = 0;
        for (auto v : comp)
            cm |= std::uint64_t{1} << v;
        if (cm & sp.required)
            continue;
        if (!(cm & allowed))
            return std::nullopt;
        ++sp.lower;
    }
    if (!sp.forces(sp.required | allowed))
        return std::nullopt;
    return sp;
}

ZfsResult solve(const Graph& g, std::span<const VertexId> pool, const SolveOptions& opts, bool parallel,
                bool& feasible) {
    auto space = make_space(g, pool, {}, opts);
    feasible = space.has_value();
    if (!feasible)
        return {};
    const auto& sp = *space;
    std::uint64_t explored = 0;
    for (std::size_t s = sp.lower; s <= sp.pool.size(); ++s) {
        auto hit = parallel ? search_level_parallel(sp, s, opts) : search_level_serial(sp, s, opts);
        if (!hit) {
            explored += binomial(sp.pool.size(), s);
            continue;
        }
        ZfsResult r;
        const std::uint64_t mask = sp.mask_of(hit->combo);
        for (VertexId v = 0; v < g.order(); ++v)
            if ((mask >> v) & 1U)
                r.witness.push_back(v);
        r.value = r.witness.size();
        r.explored = explored + hit->rank + 1;
        r.trace = closure(g, r.witness);
        return r;
    }
    feasible = false; // unreachable: the full pool forces
    return {};
}

std::vector<VertexId> all_vertices(const Graph& g) {
    std::vector<VertexId> v(g.order());
    for (VertexId i = 0; i < g.order(); ++i)
        v[i] = i;
    return v;
}

} // namespace

ZfsResult zero_forcing_number(const Graph& g, const SolveOptions& opts) {
    bool feasible = false;
    auto all = all_vertices(g);
    auto r = solve(g, all, opts, opts.threads != 1, feasible);
    if (!feasible)
        throw Error("internal: full vertex set failed to force");
    return r;
}

ZfsResult zero_forcing_number_serial(const Graph& g, const SolveOptions& opts) {
    bool feasible = false;
    auto all = all_vertices(g);
    auto r = solve(g, all, opts, false, feasible);
    if (!feasible)
        throw Error("internal: full vertex set failed to force");
    return r;
}

std::optional<ZfsResult> zero_forcing_number_restricted(const Graph& g, std::span<const VertexId> pool,
                                                        const SolveOptions& opts) {
    bool feasible = false;
    auto r = solve(g, pool, opts, opts.threads != 1, feasible);
    if (!feasible)
        return std::nullopt;
    return r;
}

std::optional<std::vector<VertexId>> find_zero_forcing_set(const Graph& g, std::span<const VertexId> pool,
                                                           std::span<const VertexId> required, std::size_t size,
                                                           const SolveOptions& opts) {
    auto space = make_space(g, pool, required, opts);
    if (!space)
        return std::nullopt;
    const auto fixed = static_cast<std::size_t>(std::popcount(space->required));
    if (size < fixed)
        return std::nullopt;
    auto hit = opts.threads != 1 ? search_level_parallel(*space, size - fixed, opts)
                                 : search_level_serial(*space, size - fixed, opts);
    if (!hit)
        return std::nullopt;
    std::vector<VertexId> out;
    const std::uint64_t mask = space->mask_of(hit->combo);
    for (VertexId v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1U)
            out.push_back(v);
    return out;
}

std::vector<std::vector<VertexId>> all_zero_forcing_sets_of_size(const Graph& g, std::size_t size,
                                                                 const SolveOptions& opts) {
    std::vector<std::vector<VertexId>> out;
    auto all = all_vertices(g);
    auto space = make_space(g, all, {}, opts);
    if (!space)
        return out;
    const auto fixed = static_cast<std::size_t>(std::popcount(space->required));
    if (size < fixed || size - fixed > space->pool.size())
        return out;
    std::vector<int> combo(size - fixed);
    for (std::size_t i = 0; i < combo.size(); ++i)
        combo[i] = static_cast<int>(i);
    std::uint64_t count = 0;
    do {
        if ((++count & 1023U) == 0 && expired(opts))
            throw Timeout("enumeration exceeded its time limit");
        const std::uint64_t mask = space->mask_of(combo);
        if (space->forces(mask)) {
            std::vector<VertexId> s;
            for (VertexId v = 0; v < g.order(); ++v)
                if ((mask >> v) & 1U)
                    s.push_back(v);
            out.push_back(std::move(s));
        }
    } while (next_combination(combo, space->pool.size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string trace_to_json(const ForceTrace& t) {
    std::ostringstream os;
    auto list = [&](const std::vector<VertexId>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << ']';
    };
    os << "{\"initial\":";
    list(t.initial);
    os << ",\"forces\":[";
    for (std::size_t i = 0; i < t.forces.size(); ++i)
        os << (i ? "," : "") << '[' << t.forces[i].forcer << ',' << t.forces[i].forced << ']';
    os << "],\"final\":";
    list(t.final_set);
    os << '}';
    return os.str();
}

} // namespace zf
