#include "zf/grid.hpp"

#include <charconv>
#include <set>

#include "zf/graph_io.hpp"

namespace zf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, long long& out) {
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

// "lo..hi" or "n".
bool parse_range(std::string_view s, long long& lo, long long& hi) {
    auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        if (!parse_int(s, lo))
            return false;
        hi = lo;
        return true;
    }
    return parse_int(s.substr(0, dots), lo) && parse_int(s.substr(dots + 2), hi);
}

void check_range(long long lo, long long hi, std::string_view token) {
    if (lo > hi)
        throw InputError("empty range in \"" + std::string(token) + "\"");
    if (hi - lo > 100000)
        throw InputError("range too large in \"" + std::string(token) + "\"");
}

} // namespace

const FamilySpec& SlotValue::graph() const {
    if (auto f = std::get_if<FamilySpec>(&value_))
        return *f;
    throw InputError("slot value " + str() + " is not a graph");
}

long long SlotValue::integer() const {
    if (auto n = std::get_if<long long>(&value_))
        return *n;
    throw InputError("slot value " + str() + " is not an integer");
}

std::string SlotValue::str() const {
    if (auto n = std::get_if<long long>(&value_))
        return std::to_string(*n);
    return std::get<FamilySpec>(value_).str();
}

std::vector<SlotValue> expand_slot_value(std::string_view token) {
    token = trim(token);
    std::vector<SlotValue> out;
    long long lo = 0, hi = 0;
    if (token.find(':') == std::string_view::npos) {
        if (!parse_range(token, lo, hi))
            throw InputError("bad grid value \"" + std::string(token) + "\"");
        check_range(lo, hi, token);
        for (long long v = lo; v <= hi; ++v)
            out.emplace_back(v);
        return out;
    }
    if (token.find('+') != std::string_view::npos || token.starts_with("g6:") || token.starts_with("pruefer")) {
        out.emplace_back(parse_family_spec(token));
        return out;
    }
    const auto colon = token.find(':');
    const std::string name(token.substr(0, colon));
    const auto arg = token.substr(colon + 1);
    if (!parse_range(arg, lo, hi))
        throw InputError("bad family range in \"" + std::string(token) + "\"");
    check_range(lo, hi, token);

    if (name == "tree" || name == "tree-shapes") {
        std::set<std::string> seen;
        for (long long n = lo; n <= hi; ++n) {
            if (n < 2 || n > 8)
                throw InputError("grid tree orders must lie in 2..8");
            for_each_pruefer_code(static_cast<std::size_t>(n), [&](std::span<const int> code) {
                if (name == "tree-shapes" && !seen.insert(tree_shape_key(tree_from_pruefer(code))).second)
                    return;
                FamilySpec f;
                f.name = "pruefer";
                f.params.assign(code.begin(), code.end());
                out.emplace_back(std::move(f));
            });
        }
        return out;
    }
    if (name == "connected") {
        for (long long n = lo; n <= hi; ++n) {
            if (n < 1 || n > 7)
                throw InputError("connected-graph orders must lie in 1..7");
            for_each_connected_graph(static_cast<std::size_t>(n), [&](const Graph& g) {
                FamilySpec f;
                f.name = "g6";
                f.code = emit_graph6(g);
                out.emplace_back(std::move(f));
            });
        }
        return out;
    }
    for (long long n = lo; n <= hi; ++n) {
        auto spec = parse_family_spec(name + ":" + std::to_string(n));
        out.emplace_back(std::move(spec));
    }
    return out;
}

const std::vector<SlotValue>* Grid::find(std::string_view name) const {
    for (const auto& [slot, values] : slots_)
        if (slot == name)
            return &values;
    return nullptr;
}

Grid parse_grid(std::string_view text) {
    std::vector<Grid::Slot> slots;
    while (!trim(text).empty()) {
        const auto semi = text.find(';');
        const auto part = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (part.empty())
            continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw InputError("grid entry \"" + std::string(part) + "\" must look like slot=values");
        std::string name(trim(part.substr(0, eq)));
        for (const auto& s : slots)
            if (s.first == name)
                throw InputError("grid slot \"" + name + "\" given twice");

        // Comma-separated alternatives; bare digits continue a pruefer code.
        std::vector<std::string> tokens;
        auto rest = part.substr(eq + 1);
        while (true) {
            const auto comma = rest.find(',');
            auto tok = trim(rest.substr(0, comma));
            if (all_digits(tok) && !tokens.empty() && tokens.back().starts_with("pruefer"))
                tokens.back() += "," + std::string(tok);
            else
                tokens.emplace_back(tok);
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        std::vector<SlotValue> values;
        for (const auto& tok : tokens) {
            if (tok.empty())
                throw InputError("empty value in grid slot \"" + name + "\"");
            auto expanded = expand_slot_value(tok);
            values.insert(values.end(), expanded.begin(), expanded.end());
        }
        slots.emplace_back(std::move(name), std::move(values));
    }
    return Grid(std::move(slots));
}

const SlotValue& Instance::get(std::string_view slot) const {
    for (const auto& [name, value] : slots_)
        if (name == slot)
            return value;
    throw InputError("instance has no slot \"" + std::string(slot) + "\"");
}

const FamilySpec& Instance::graph(std::string_view slot) const { return get(slot).graph(); }
long long Instance::integer(std::string_view slot) const { return get(slot).integer(); }

bool Instance::has(std::string_view slot) const {
    for (const auto& [name, value] : slots_)
        if (name == slot)
            return true;
    return false;
}

std::string Instance::str() const {
    std::string s;
    for (std::size_t i = 0; i < slots_.size(); ++i)
        s += (i ? ";" : "") + slots_[i].first + "=" + slots_[i].second.str();
    return s;
}

Instance parse_instance(std::string_view text) {
    const Grid g = parse_grid(text);
    std::vector<std::pair<std::string, SlotValue>> slots;
    for (const auto& [name, values] : g.slots()) {
        if (values.size() != 1)
            throw InputError("instance slot \"" + name + "\" must hold exactly one value");
        slots.emplace_back(name, values.front());
    }
    return Instance(std::move(slots));
}

std::vector<Instance> expand(const Grid& grid, std::span<const std::string> slot_names, const Grid& defaults) {
    std::vector<const std::vector<SlotValue>*> columns;
    for (const auto& name : slot_names) {
        const auto* values = grid.find(name);
        if (!values)
            values = defaults.find(name);
        if (!values)
            throw InputError("grid has no values for slot \"" + name + "\"");
        columns.push_back(values);
    }
    std::vector<Instance> out;
    for (const auto* c : columns)
        if (c->empty())
            return out;
    std::vector<std::size_t> idx(columns.size(), 0);
    while (true) {
        std::vector<std::pair<std::string, SlotValue>> slots;
        for (std::size_t i = 0; i < columns.size(); ++i)
            slots.emplace_back(slot_names[i], (*columns[i])[idx[i]]);
        out.emplace_back(std::move(slots));
        std::size_t i = columns.size();
        while (i > 0) {
            if (++idx[i - 1] < columns[i - 1]->size())
                break;
            idx[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
    }
    return out;
}

} // namespace zf
