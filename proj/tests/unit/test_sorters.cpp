#include "doctest.h"
#include "oracles.hpp"

#include "permsort/errors.hpp"
#include "permsort/pattern.hpp"
#include "permsort/sequences.hpp"
#include "permsort/sorters.hpp"

using namespace permsort;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

} // namespace

TEST_CASE("stack sort values") {
    CHECK(stack_sort(P("231")) == P("213"));
    // S(3 5 241) = S(3) S(241) 5 = 3 214 5.
    CHECK(stack_sort(P("35241")) == P("32145"));
    CHECK(stack_sort(Permutation::identity(6)) == Permutation::identity(6));
    CHECK(stack_sort_automaton(P("231").values()) == Word{2, 1, 3});
    CHECK(stack_sort_automaton(P("1").values()) == Word{1});
    CHECK(stack_sort(std::span<const int>{}).empty());
}

TEST_CASE("sorters act on words that are not permutations") {
    const Word w = {7, 2, 9};
    CHECK(stack_sort(w) == Word{2, 7, 9});
    CHECK(tack_sort(w) == Word{2, 7, 9});
    CHECK(bubble_sort(Word{9, 2, 7}) == Word{2, 7, 9});
}

TEST_CASE("tack and bubble sort values") {
    CHECK(tack_sort(P("231")) == P("123"));
    CHECK(tack_sort(P("1")) == P("1"));
    CHECK(bubble_sort(P("321")) == P("213"));
    CHECK(bubble_sort(P("231")) == P("213"));
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(bubble_sort(Permutation::identity(n)) == Permutation::identity(n));
        CHECK(tack_sort(Permutation::decreasing(n)) == stack_sort(Permutation::identity(n)));
    }
}

TEST_CASE("both stack sort definitions agree with a naive stack pass, S_n for n <= 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& p : oracle::all_perms(n)) {
            const Word expected = oracle::stack_pass(p.word());
            REQUIRE(stack_sort(p.values()) == expected);
            REQUIRE(stack_sort_automaton(p.values()) == expected);
            REQUIRE(tack_sort(p) == stack_sort(reverse(p)));
        }
    }
}

TEST_CASE("sorter spec grammar") {
    const SorterSpec spec = SorterSpec::parse("S.i.c.r.S");
    CHECK(spec.steps().size() == 5);
    CHECK(spec.to_string() == "S.i.c.r.S");
    CHECK(SorterSpec::parse("T.B").to_string() == "T.B");
    CHECK_THROWS_AS(SorterSpec::parse(""), InvalidInputError);
    CHECK_THROWS_AS(SorterSpec::parse("S..S"), InvalidInputError);
    CHECK_THROWS_AS(SorterSpec::parse("S.x"), InvalidInputError);
}

TEST_CASE("compositions apply right to left") {
    CHECK(apply_sorter(SorterSpec::parse("S.S"), P("3142")) == P("1234"));
    CHECK(apply_sorter(SorterSpec::parse("e"), P("3142")) == P("3142"));
    // r first, then S: S(r(231)) = S(132) = 123, while r(S(231)) = 312.
    CHECK(apply_sorter(SorterSpec::parse("S.r"), P("231")) == P("123"));
    CHECK(apply_sorter(SorterSpec::parse("r.S"), P("231")) == P("312"));
}

TEST_CASE("membership in Id(Sort)") {
    CHECK_FALSE(is_sorted_by(SorterSpec::parse("S"), P("231")));
    CHECK(is_sorted_by(SorterSpec::parse("S"), P("132")));
    for (const char* spec : {"S", "T", "B", "S.S", "S.i.S", "T.B.S"})
        for (std::size_t n = 1; n <= 6; ++n) CHECK(is_sorted_by(SorterSpec::parse(spec), Permutation::identity(n)));
}

TEST_CASE("S.c.S sorts exactly the 231-avoiders in S_5") {
    const SorterSpec spec = SorterSpec::parse("S.c.S");
    for (const auto& p : oracle::all_perms(5))
        REQUIRE(is_sorted_by(spec, p) == oracle::occurrences(p, {2, 3, 1}).empty());
}

TEST_CASE("Id classes") {
    CHECK(id_class(SorterSpec::parse("S.S"), 4).size() == 22);
    CHECK(id_class(SorterSpec::parse("S.i.S"), 5).size() == 92);
    CHECK(id_class(SorterSpec::parse("S"), 3).size() == 5);
    EnumerationOptions small;
    small.cap = 4;
    CHECK_THROWS_AS(id_class(SorterSpec::parse("S"), 5, small), ResourceLimitError);
}

TEST_CASE("S.T = S.S.r and T.S = S.r.S as sorted classes, n <= 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(id_class(SorterSpec::parse("S.T"), n) == id_class(SorterSpec::parse("S.S.r"), n));
        CHECK(id_class(SorterSpec::parse("T.S"), n) == id_class(SorterSpec::parse("S.r.S"), n));
    }
}

TEST_CASE("sorted classes match their pattern characterizations, n <= 8") {
    struct Item {
        std::vector<const char*> specs;
        std::vector<const char*> patterns;
    };
    const Item items[] = {
        {{"S.S", "S.i.c.r.S"}, {"2341,3^5241"}},
        {{"S.c.S", "S.i.r.S"}, {"231"}},
        {{"S.r.S", "S.i.c.S"}, {"1342,31-4-2", "1342,3^5142"}},
        {{"S.i.S", "S.r.c.S"}, {"3412,3-4-21"}},
    };
    for (const auto& item : items) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto reference = id_class(SorterSpec::parse(item.specs[0]), n);
            for (const char* spec : item.specs) {
                CAPTURE(spec);
                CAPTURE(n);
                CHECK(id_class(SorterSpec::parse(spec), n) == reference);
            }
            for (const char* ps : item.patterns) {
                CAPTURE(ps);
                CAPTURE(n);
                CHECK(avoidance_class(parse_pattern_set(ps), n) == reference);
            }
        }
    }
}
