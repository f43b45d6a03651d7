#include "qlwb/element_set.hpp"

#include <bit>

namespace qlwb {

ElementSet::ElementSet(int capacity) :
    _capacity(capacity),
    _words((capacity + 63) / 64, 0)
{
}

auto ElementSet::full(int capacity) -> ElementSet
{
    ElementSet result(capacity);
    for (int i = 0; i < capacity; ++i)
        result.set(i);
    return result;
}

auto ElementSet::count() const -> int
{
    int total = 0;
    for (auto w : _words)
        total += std::popcount(w);
    return total;
}

auto ElementSet::empty() const -> bool
{
    for (auto w : _words)
        if (w)
            return false;
    return true;
}

auto ElementSet::subset_of(const ElementSet & other) const -> bool
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & ~other._words[i])
            return false;
    return true;
}

auto ElementSet::intersects(const ElementSet & other) const -> bool
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & other._words[i])
            return true;
    return false;
}

auto ElementSet::first() const -> int
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        if (_words[i])
            return static_cast<int>(i * 64 + std::countr_zero(_words[i]));
    return -1;
}

auto ElementSet::next(int i) const -> int
{
    ++i;
    if (i >= _capacity)
        return -1;
    std::size_t w = static_cast<std::size_t>(i) >> 6;
    std::uint64_t bits = _words[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (bits)
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        if (++w >= _words.size())
            return -1;
        bits = _words[w];
    }
}

auto ElementSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    for (int i = first(); i != -1; i = next(i))
        result.push_back(i);
    return result;
}

auto ElementSet::operator&=(const ElementSet & other) -> ElementSet &
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] &= other._words[i];
    return *this;
}

auto ElementSet::operator|=(const ElementSet & other) -> ElementSet &
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] |= other._words[i];
    return *this;
}

auto ElementSet::operator-=(const ElementSet & other) -> ElementSet &
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] &= ~other._words[i];
    return *this;
}

auto ElementSet::operator<(const ElementSet & other) const -> bool
{
    // Characteristic vectors compared from the lowest index; a member sorts before a non-member.
    for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] == other._words[i])
            continue;
        auto diff = _words[i] ^ other._words[i];
        auto bit = std::uint64_t{1} << std::countr_zero(diff);
        return (_words[i] & bit) != 0;
    }
    return false;
}

auto ElementSetHash::operator()(const ElementSet & s) const -> std::size_t
{
    std::size_t h = 1469598103934665603ull;
    for (auto w : s.words()) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

}
