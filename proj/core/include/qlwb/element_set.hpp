#pragma once

#include <cstdint>
#include <vector>

namespace qlwb {

/// Fixed-capacity bitset over element indices of one structure.
class ElementSet
{
public:
    ElementSet() = default;
    explicit ElementSet(int capacity);

    static auto full(int capacity) -> ElementSet;

    auto capacity() const -> int { return _capacity; }

    auto test(int i) const -> bool { return (_words[i >> 6] >> (i & 63)) & 1u; }
    auto set(int i) -> void { _words[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    auto reset(int i) -> void { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    auto count() const -> int;
    auto empty() const -> bool;
    auto subset_of(const ElementSet & other) const -> bool;
    auto intersects(const ElementSet & other) const -> bool;

    /// Lowest member, or -1 when empty.
    auto first() const -> int;
    /// Lowest member strictly greater than i, or -1.
    auto next(int i) const -> int;

    auto members() const -> std::vector<int>;

    auto operator&=(const ElementSet & other) -> ElementSet &;
    auto operator|=(const ElementSet & other) -> ElementSet &;
    auto operator-=(const ElementSet & other) -> ElementSet &;

    friend auto operator&(ElementSet a, const ElementSet & b) -> ElementSet { return a &= b; }
    friend auto operator|(ElementSet a, const ElementSet & b) -> ElementSet { return a |= b; }
    friend auto operator-(ElementSet a, const ElementSet & b) -> ElementSet { return a -= b; }

    auto operator==(const ElementSet & other) const -> bool = default;
    auto operator<(const ElementSet & other) const -> bool;

    auto words() const -> const std::vector<std::uint64_t> & { return _words; }

private:
    int _capacity = 0;
    std::vector<std::uint64_t> _words;
};

struct ElementSetHash
{
    auto operator()(const ElementSet & s) const -> std::size_t;
};

}
