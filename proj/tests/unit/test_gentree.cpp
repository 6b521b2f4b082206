#include "doctest.h"
#include "oracles.hpp"

#include "permsort/classes.hpp"
#include "permsort/errors.hpp"
#include "permsort/gentree.hpp"
#include "permsort/sequences.hpp"

#include <set>

using namespace permsort;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

constexpr InsertionRule kRules[] = {InsertionRule::Largest, InsertionRule::Smallest, InsertionRule::Rightmost,
                                    InsertionRule::Leftmost};

std::vector<Permutation> children_of(const Permutation& p, InsertionRule rule) {
    std::vector<Permutation> out;
    for (const Site& s : sites(p, rule)) out.push_back(insert(p, s));
    return out;
}

} // namespace

TEST_CASE("rule names") {
    for (InsertionRule r : kRules) CHECK(parse_insertion_rule(to_string(r)) == r);
    CHECK_THROWS_AS(parse_insertion_rule("middle"), InvalidInputError);
}

TEST_CASE("site counts") {
    for (InsertionRule r : kRules) {
        CHECK(sites(P("3241"), r).size() == 5);
        CHECK(sites(P("1"), r).size() == 2);
    }
}

TEST_CASE("insertions in canonical site order") {
    CHECK(children_of(P("3241"), InsertionRule::Largest) ==
          std::vector<Permutation>{P("53241"), P("35241"), P("32541"), P("32451"), P("32415")});
    // Smallest sites run left to right, so site 1 puts the new 1 in front.
    CHECK(insert(P("1"), Site{InsertionRule::Smallest, 1}) == P("12"));
    CHECK(insert(P("1"), Site{InsertionRule::Smallest, 2}) == P("21"));
    // Rightmost sites of 21 run top to bottom: above 2, between, below 1.
    CHECK(children_of(P("21"), InsertionRule::Rightmost) == std::vector<Permutation>{P("213"), P("312"), P("321")});
    // Leftmost sites run bottom to top.
    CHECK(children_of(P("21"), InsertionRule::Leftmost) == std::vector<Permutation>{P("132"), P("231"), P("321")});
    CHECK_THROWS_AS(insert(P("21"), Site{InsertionRule::Largest, 0}), DomainError);
    CHECK_THROWS_AS(insert(P("21"), Site{InsertionRule::Largest, 4}), DomainError);
}

TEST_CASE("removing the inserted extreme recovers the parent, n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& p : oracle::all_perms(n)) {
            for (InsertionRule r : kRules) {
                const auto kids = children_of(p, r);
                REQUIRE(std::set<Permutation>(kids.begin(), kids.end()).size() == n + 1);
                for (const auto& child : kids) REQUIRE(remove_extreme(child, r) == p);
            }
        }
    }
}

TEST_CASE("active sites and children") {
    const ClassPredicate two_stack = parse_class("Id(S.S)");
    CHECK(active_sites(P("1"), InsertionRule::Rightmost, two_stack).size() == 2);
    const auto kids = children(P("1"), InsertionRule::Rightmost, two_stack);
    CHECK(std::set<Permutation>(kids.begin(), kids.end()) == std::set<Permutation>{P("21"), P("12")});
    const auto sis_kids = children(P("1"), InsertionRule::Smallest, parse_class("Id(S.i.S)"));
    CHECK(std::set<Permutation>(sis_kids.begin(), sis_kids.end()) == std::set<Permutation>{P("21"), P("12")});

    const ClassPredicate av231 = parse_class("Av(231)");
    // A new maximum anywhere in 12...n creates no 231; a new minimum only
    // avoids it in front of or right after the 1.
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(active_sites(Permutation::identity(n), InsertionRule::Largest, av231).size() == n + 1);
        CHECK(active_sites(Permutation::identity(n), InsertionRule::Smallest, av231).size() == 2);
    }

    const ClassPredicate everything = all_permutations();
    for (InsertionRule r : kRules) CHECK(children(P("2413"), r, everything).size() == 5);

    CHECK_THROWS_AS(active_sites(P("231"), InsertionRule::Smallest, av231), PreconditionError);
    CHECK_THROWS_AS(children(P("231"), InsertionRule::Smallest, av231), PreconditionError);
}

TEST_CASE("active sites are exactly the insertions that stay in the class") {
    const ClassPredicate c = parse_class("Av(3412,3-4-21)");
    for (const auto& p : class_members(c, 5)) {
        const auto flags = activity(p, InsertionRule::Smallest, c);
        const auto all = sites(p, InsertionRule::Smallest);
        for (std::size_t k = 0; k < all.size(); ++k) REQUIRE(flags[k] == c(insert(p, all[k])));
    }
}

TEST_CASE("level counts") {
    CHECK(level_counts(parse_class("Id(S.S)"), InsertionRule::Rightmost, 4) == std::vector<std::size_t>{1, 2, 6, 22});
    CHECK(level_counts(parse_class("Id(S.i.S)"), InsertionRule::Smallest, 5) ==
          std::vector<std::size_t>{1, 2, 6, 22, 92});
    CHECK(level_counts(parse_class("Av(231)"), InsertionRule::Smallest, 3) == std::vector<std::size_t>{1, 2, 5});
}

TEST_CASE("tree levels are the class members, n <= 9") {
    struct Pair {
        const char* descriptor;
        InsertionRule rule;
    };
    const Pair pairs[] = {
        {"Id(S.S)", InsertionRule::Rightmost},          {"Id(S.r.S)", InsertionRule::Rightmost},
        {"Id(S.i.S)", InsertionRule::Smallest},         {"Av(2-14-3,2-41-3)", InsertionRule::Largest},
        {"Av(231)", InsertionRule::Largest},
    };
    for (const auto& [descriptor, rule] : pairs) {
        CAPTURE(descriptor);
        const ClassPredicate c = parse_class(descriptor);
        const std::size_t nmax = 8;
        const auto levels = tree_levels(c, rule, nmax);
        for (std::size_t n = 1; n <= nmax; ++n) {
            auto level = levels[n - 1];
            std::sort(level.begin(), level.end());
            REQUIRE(level == class_members(c, n));
        }
    }
    CHECK(BigInt(level_counts(parse_class("Id(S.S)"), InsertionRule::Rightmost, 9).back()) == west_two_stack(9));
    CHECK(BigInt(level_counts(parse_class("Av(2-14-3,2-41-3)"), InsertionRule::Largest, 9).back()) == baxter(9));
}

TEST_CASE("closure under parent removal") {
    CHECK(verify_closure(parse_class("Av(3412,3-4-21)"), InsertionRule::Smallest, 7));
    CHECK(verify_closure(parse_class("Av(2-14-3,2-41-3)"), InsertionRule::Largest, 7));
    for (InsertionRule r : kRules) CHECK(verify_closure(parse_class("Av(2413,3142)"), r, 6));
    // Dropping 12 from Av(231) orphans 123.
    const ClassPredicate broken = toggle_member(parse_class("Av(231)"), P("12"));
    CHECK_FALSE(verify_closure(broken, InsertionRule::Largest, 3));
    CHECK(closure_counterexample(broken, InsertionRule::Largest, 3).has_value());
    CHECK_THROWS_AS(level_counts(broken, InsertionRule::Largest, 3), IntegrityError);
}

TEST_CASE("phi and psi labels of small permutations") {
    const ClassPredicate two_stack = parse_class("Id(S.S)");
    CHECK(phi_label_of(P("1"), two_stack) == PhiLabel{2, {1}});
    CHECK(to_string(phi_label_of(P("1"), two_stack)) == "(2,1,(1))");
    // Every child of 12 is two-stack sortable; 12 has one right-to-left maximum.
    const PhiLabel l12 = phi_label_of(P("12"), two_stack);
    CHECK(l12.x == 3);
    CHECK(l12.k() == 1);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(phi_label_of(Permutation::decreasing(n), two_stack).k() == static_cast<int>(n));
    CHECK_THROWS_AS(phi_label_of(P("2341"), two_stack), PreconditionError);

    const ClassPredicate sis = parse_class("Id(S.i.S)");
    CHECK(psi_label_of(P("1"), sis, PsiReading::FirstAscent) == PsiLabel{2, 0});
    CHECK(psi_label_of(P("21"), sis, PsiReading::FirstAscent) == PsiLabel{3, 0});
    CHECK(psi_label_of(P("12"), sis, PsiReading::FirstAscent) == PsiLabel{2, 1});
    CHECK(to_string(PsiLabel{2, 1}) == "(2,1)");
    CHECK(psi_label_of(P("1"), parse_class("Av(2-14-3,2-41-3)"), PsiReading::AroundMaximum) == PsiLabel{2, 0});
    CHECK(rule_for(PsiReading::FirstAscent) == InsertionRule::Smallest);
    CHECK(rule_for(PsiReading::AroundMaximum) == InsertionRule::Largest);
    CHECK_THROWS_AS(psi_label_of(P("3412"), sis, PsiReading::FirstAscent), PreconditionError);
}

TEST_CASE("label x counts children and k counts right-to-left maxima, n <= 6") {
    for (const char* d : {"Id(S.S)", "Id(S.r.S)"}) {
        const ClassPredicate c = parse_class(d);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const auto& p : class_members(c, n)) {
                int expected_x = 0;
                for (const auto& child : children_of(p, InsertionRule::Rightmost)) expected_x += c(child);
                const PhiLabel l = phi_label_of(p, c);
                REQUIRE(l.x == expected_x);
                int records = 0;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    bool rec = true;
                    for (std::size_t j = i + 1; j < p.size(); ++j) rec = rec && p[i] > p[j];
                    records += rec;
                }
                REQUIRE(l.k() == records);
            }
        }
    }
}
