#ifndef ZF_GRID_HPP
#define ZF_GRID_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zf/families.hpp"

namespace zf {

// A grid slot holds either a graph (family spec) or an integer.
class SlotValue {
public:
    SlotValue(FamilySpec f) : value_(std::move(f)) {}
    SlotValue(long long n) : value_(n) {}

    bool is_graph() const { return std::holds_alternative<FamilySpec>(value_); }
    const FamilySpec& graph() const;
    long long integer() const;
    std::string str() const;

private:
    std::variant<FamilySpec, long long> value_;
};

// "slot=value,value;slot=..." with inclusive ranges "lo..hi" in integer
// slots and in the last family parameter ("path:2..4"). Grid-only
// generators: "tree:lo..hi" (every labeled tree), "tree-shapes:lo..hi"
// (one tree per isomorphism class), "connected:lo..hi" (every labeled
// connected graph, as g6 specs).
class Grid {
public:
    using Slot = std::pair<std::string, std::vector<SlotValue>>;

    Grid() = default;
    explicit Grid(std::vector<Slot> slots) : slots_(std::move(slots)) {}

    std::span<const Slot> slots() const { return slots_; }
    const std::vector<SlotValue>* find(std::string_view name) const;
    bool empty() const { return slots_.empty(); }

private:
    std::vector<Slot> slots_;
};

Grid parse_grid(std::string_view text);
std::vector<SlotValue> expand_slot_value(std::string_view token);

// One grid point, slots in the claim's declared order.
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<std::pair<std::string, SlotValue>> slots) : slots_(std::move(slots)) {}

    const FamilySpec& graph(std::string_view slot) const;
    long long integer(std::string_view slot) const;
    bool has(std::string_view slot) const;
    std::span<const std::pair<std::string, SlotValue>> slots() const { return slots_; }
    // "G=path:2;H=path:2;k=1"
    std::string str() const;

private:
    const SlotValue& get(std::string_view slot) const;
    std::vector<std::pair<std::string, SlotValue>> slots_;
};

Instance parse_instance(std::string_view text);

// Cartesian product over `slot_names`; each slot comes from `grid` when
// present, otherwise from `defaults`. The first slot varies slowest.
std::vector<Instance> expand(const Grid& grid, std::span<const std::string> slot_names, const Grid& defaults);

} // namespace zf

#endif // ZF_GRID_HPP
