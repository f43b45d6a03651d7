#include "support.hpp"

#include <qlwb/axioms.hpp>
#include <qlwb/completion.hpp>
#include <qlwb/constructors.hpp>
#include <qlwb/corpus.hpp>
#include <qlwb/embedding.hpp>
#include <qlwb/error.hpp>
#include <qlwb/states.hpp>
#include <qlwb/structure_io.hpp>

#include <doctest.h>

using namespace qlwb;

namespace {

auto mask(const ElementSet & s) -> std::uint32_t
{
    std::uint32_t m = 0;
    for (int x : s.members())
        m |= 1u << x;
    return m;
}

auto small_posets() -> std::vector<std::pair<std::string, StructureTable>>
{
    std::vector<std::pair<std::string, StructureTable>> out;
    for (auto & [name, s] : corpus_structures())
        if (s.size() <= 20)
            out.emplace_back(name, s);
    for (int n = 2; n <= 6; ++n)
        for (auto & p : oracle::bounded_posets(n))
            out.emplace_back("poset" + std::to_string(n), p);
    return out;
}

}

TEST_CASE("MacNeille cuts match brute-force closure enumeration")
{
    for (auto & [name, p] : small_posets()) {
        CAPTURE(name);
        auto c = macneille(underlying_poset(p));
        auto expected = oracle::cuts(p);
        std::set<std::uint32_t> got;
        for (auto & l : c.lower)
            got.insert(mask(l));
        CHECK(got == expected);
        REQUIRE(c.lower.size() == static_cast<std::size_t>(c.lattice.size()));
        for (int i = 0; i < c.lattice.size(); ++i)
            for (int j = 0; j < c.lattice.size(); ++j)
                CHECK(c.lattice.leq(i, j) == c.lower[i].subset_of(c.lower[j]));
        for (int x = 0; x < p.size(); ++x)
            CHECK(c.lower[c.embedding[x]] == p.down(x));
        CHECK(oracle::laws(c.lattice).lattice);
    }
}

TEST_CASE("the two orthocomplement routes on cuts agree")
{
    for (auto & [name, p] : corpus_structures()) {
        if (! oracle::laws(p).orthoposet)
            continue;
        CAPTURE(name);
        auto c = macneille_ortho(p);
        CHECK(c.lattice.ortho_map() == cut_ortho_via_upper(p, c));
        for (int x = 0; x < p.size(); ++x)
            CHECK(c.lattice.ortho(c.embedding[x]) == c.embedding[p.ortho(x)]);
        CHECK(oracle::laws(c.lattice).ol);
    }
}

TEST_CASE("MacNeille completion of the 4-loop adds two cuts and is not orthomodular")
{
    auto p = corpus_structure("loop4");
    auto c = macneille_ortho(p);
    CHECK(c.lattice.size() == static_cast<int>(oracle::cuts(p).size()));
    auto l = oracle::laws(c.lattice);
    CHECK(l.ol);
    CHECK_FALSE(l.oml);
}

TEST_CASE("completion output round-trips through the struct format")
{
    for (auto & name : {"loop4", "poset6", "benzene", "mo3", "loop5"}) {
        CAPTURE(name);
        auto p = corpus_structure(name);
        auto c = p.has_ortho() ? macneille_ortho(p) : macneille(p);
        auto text = write_struct(c.lattice);
        CHECK(parse_struct(text) == c.lattice);
        CHECK(write_struct(parse_struct(text)) == text);
    }
}

TEST_CASE("lattices are their own completion")
{
    for (auto & [name, p] : corpus_structures()) {
        if (! oracle::laws(p).lattice)
            continue;
        CAPTURE(name);
        auto c = p.has_ortho() ? macneille_ortho(p) : macneille(p);
        CHECK(c.lattice.size() == p.size());
        CHECK(isomorphic(p, c.lattice));
    }
}

TEST_CASE("Kalmbach sizes follow the even-chain count")
{
    CHECK(kalmbach(chain_poset(2)).size() == 2);
    CHECK(kalmbach(chain_poset(3)).size() == 4);
    CHECK(kalmbach(underlying_poset(boolean_algebra(2))).size() == 6);
    for (int n = 2; n <= 6; ++n)
        for (auto & p : oracle::bounded_posets(n)) {
            auto k = kalmbach(p);
            CHECK(k.size() == oracle::even_chain_count(p));
            auto l = oracle::laws(k);
            CHECK(l.omp);
            if (oracle::laws(p).lattice)
                CHECK(l.oml);
            CHECK(parse_struct(write_struct(k)) == k);
        }
}

TEST_CASE("Kalmbach extension of a non-lattice is an OMP")
{
    auto p = corpus_structure("poset6");
    CHECK_FALSE(oracle::laws(p).lattice);
    auto k = kalmbach(p);
    CHECK(oracle::laws(k).omp);
    CHECK(k.size() == oracle::even_chain_count(p));
}

TEST_CASE("Kalmbach extensions of small lattices have a full set of 2-valued states")
{
    for (auto & p : {chain_poset(3), chain_poset(4), underlying_poset(boolean_algebra(2)),
             underlying_poset(mo(2)), corpus_structure("pentagon")}) {
        auto k = kalmbach(p);
        auto c = is_concrete(k);
        CHECK(c.concrete);
        for (auto & st : c.family)
            CHECK(oracle::is_state(k, st.values));
    }
}

TEST_CASE("Kalmbach chain cap")
{
    CHECK_THROWS_AS(kalmbach(underlying_poset(boolean_algebra(4)), 10), ResourceError);
}
