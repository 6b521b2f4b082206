#include "doctest.h"

#include "permsort/classes.hpp"
#include "permsort/errors.hpp"
#include "permsort/gentree.hpp"
#include "permsort/rewriting.hpp"
#include "permsort/sequences.hpp"
#include "permsort/statistics.hpp"

#include <set>

using namespace permsort;

namespace {

PhiLabel L(int x, std::vector<int> p) { return PhiLabel{x, std::move(p)}; }

std::vector<PhiLabel> project(const std::vector<TrackedPhiLabel>& v) {
    std::vector<PhiLabel> out;
    for (const auto& t : v) out.push_back(t.core);
    return out;
}

std::multiset<int> qs(const std::vector<TrackedPhiLabel>& v) {
    std::multiset<int> out;
    for (const auto& t : v) out.insert(t.q);
    return out;
}

template <typename Label>
std::set<Label> reachable(const RewritingSystem<Label>& sys, std::size_t depth) {
    std::set<Label> seen{sys.root};
    std::vector<Label> frontier{sys.root};
    for (std::size_t d = 1; d < depth; ++d) {
        std::vector<Label> next;
        for (const auto& l : frontier)
            for (const auto& c : sys.successors(l))
                if (seen.insert(c).second) next.push_back(c);
        frontier = std::move(next);
    }
    return seen;
}

} // namespace

TEST_CASE("phi successors") {
    CHECK(phi_successors(L(2, {1})) == std::vector<PhiLabel>{L(3, {1}), L(3, {1, 2})});
    CHECK(phi_successors(L(3, {1})) == std::vector<PhiLabel>{L(3, {1}), L(4, {1, 2}), L(4, {1, 3})});
    CHECK(phi_successors(L(3, {1, 2})) == std::vector<PhiLabel>{L(3, {1}), L(4, {1, 2}), L(4, {1, 2, 3})});
    CHECK(to_string(L(3, {1, 2})) == "(3,2,(1,2))");
}

TEST_CASE("invalid labels are rejected") {
    CHECK_THROWS_AS(phi_successors(L(1, {1})), DomainError);
    CHECK_THROWS_AS(phi_successors(L(3, {})), DomainError);
    CHECK_THROWS_AS(phi_successors(L(3, {2, 1})), DomainError);
    CHECK_THROWS_AS(phi_successors(L(3, {1, 4})), DomainError);
    CHECK_THROWS_AS(psi_successors(PsiLabel{1, 0}), DomainError);
    CHECK_THROWS_AS(psi_successors(PsiLabel{2, -1}), DomainError);
    CHECK_THROWS_AS(phi_lmax_successors(TrackedPhiLabel{L(2, {1}), 0, 1}), DomainError);
}

TEST_CASE("lmax refinement") {
    const auto root = phi_lmax_system().root;
    CHECK(root == TrackedPhiLabel{L(2, {1}), 1, 1});
    const auto kids = phi_lmax_successors(root);
    CHECK(kids == std::vector<TrackedPhiLabel>{{L(3, {1}), 2, 2}, {L(3, {1, 2}), 1, 2}});
    CHECK(phi_lmax_system().format(kids[0]) == "(3,1,(1),2)");
    CHECK(qs(phi_lmax_successors(TrackedPhiLabel{L(3, {1, 2}), 1, 2})) == std::multiset<int>{2, 1, 1});
}

TEST_CASE("ldr refinement") {
    const auto kids = phi_ldr_successors(TrackedPhiLabel{L(2, {1}), 1, 1});
    REQUIRE(kids.size() == 2);
    // The second-rule child through i = x = 2.
    CHECK(kids[1].core == L(3, {1, 2}));
    CHECK(kids[1].q == 2);
    CHECK(phi_ldr_system().format(kids[1]) == "(3,2,(1,2),2,2)");
    // q < n: no child increments q.
    for (const auto& k : phi_ldr_successors(TrackedPhiLabel{L(4, {1, 2}), 1, 3})) CHECK(k.q == 1);
}

TEST_CASE("slmax refinement") {
    const auto kids = phi_slmax_successors(TrackedPhiLabel{L(2, {1}), 1, 1});
    CHECK(kids == std::vector<TrackedPhiLabel>{{L(3, {1}), 1, 2}, {L(3, {1, 2}), 2, 2}});
    CHECK(phi_slmax_system().format(kids[1]) == "(3,2,(1,2),2,2)");
    for (const auto& k : phi_slmax_successors(TrackedPhiLabel{L(4, {1, 2}), 1, 3})) CHECK(k.q == 1);
}

TEST_CASE("psi successors") {
    CHECK(psi_successors(PsiLabel{2, 0}) == std::vector<PsiLabel>{{2, 1}, {3, 0}});
    CHECK(psi_successors(PsiLabel{2, 1}) == std::vector<PsiLabel>{{2, 2}, {3, 1}, {2, 0}});
    CHECK(psi_successors(PsiLabel{3, 0}) == std::vector<PsiLabel>{{2, 2}, {3, 1}, {4, 0}});
}

TEST_CASE("level distributions") {
    CHECK(level_label_distribution(phi_system(), 1) == LabelDistribution<PhiLabel>{{L(2, {1}), 1}});
    CHECK(level_label_distribution(psi_system(), 1) == LabelDistribution<PsiLabel>{{PsiLabel{2, 0}, 1}});
    const auto phi3 = level_label_distribution(phi_system(), 3);
    CHECK(phi3 == LabelDistribution<PhiLabel>{
                      {L(3, {1}), 2}, {L(4, {1, 2}), 2}, {L(4, {1, 3}), 1}, {L(4, {1, 2, 3}), 1}});
    CHECK(level_total(phi3) == 6);
    CHECK(level_total(level_label_distribution(psi_system(), 4)) == 22);
    CHECK(level_total(level_label_distribution(phi_system(), 5)) == 91);
    CHECK_THROWS_AS(level_label_distribution(phi_system(), 0), DomainError);
    CHECK_THROWS_AS(level_label_distribution(phi_system(), 8, 10), ResourceLimitError);
}

TEST_CASE("level totals match the closed forms, n <= 12") {
    const auto phi = level_totals(phi_system(), 12);
    const auto psi = level_totals(psi_system(), 12);
    for (unsigned n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(phi[n - 1] == west_two_stack(n));
        CHECK(psi[n - 1] == baxter(n));
    }
    CHECK(named_level_totals("phi-slmax", 6) == level_totals(phi_system(), 6));
    CHECK_THROWS_AS(named_level_totals("xyz", 3), InvalidInputError);
}

TEST_CASE("successor counts: x for phi, r+s for psi, depth 10") {
    for (const auto& l : reachable(phi_system(), 10)) REQUIRE(phi_successors(l).size() == static_cast<std::size_t>(l.x));
    for (const auto& l : reachable(psi_system(), 10))
        REQUIRE(psi_successors(l).size() == static_cast<std::size_t>(l.r + l.s));
}

TEST_CASE("refined systems project onto phi, depth 8") {
    for (const auto& sys : {phi_lmax_system(), phi_ldr_system(), phi_slmax_system()}) {
        CAPTURE(sys.name);
        for (const auto& l : reachable(sys, 8)) REQUIRE(project(sys.successors(l)) == phi_successors(l.core));
    }
}

TEST_CASE("tracked marginals") {
    CHECK(tracked_stat_distribution(phi_slmax_system(), 2) == std::map<int, BigInt>{{1, 1}, {2, 1}});
    for (const auto& sys : {phi_lmax_system(), phi_ldr_system(), phi_slmax_system()})
        CHECK(tracked_stat_distribution(sys, 1) == std::map<int, BigInt>{{1, 1}});

    struct Refined {
        RewritingSystem<TrackedPhiLabel> sys;
        StatName stat;
    };
    const Refined refined[] = {
        {phi_lmax_system(), StatName::Lmax}, {phi_ldr_system(), StatName::Ldr}, {phi_slmax_system(), StatName::Slmax}};
    for (const auto& [sys, name] : refined) {
        for (const char* d : {"Id(S.S)", "Id(S.r.S)"}) {
            for (std::size_t n = 1; n <= 7; ++n) {
                CAPTURE(sys.name);
                CAPTURE(d);
                CAPTURE(n);
                std::map<int, BigInt> brute;
                for (const auto& p : class_members(parse_class(d), n)) brute[stat(name, p)] += 1;
                CHECK(tracked_stat_distribution(sys, n) == brute);
            }
        }
    }
}

TEST_CASE("children labels follow the rewriting rules, n <= 6") {
    for (const char* d : {"Id(S.S)", "Id(S.r.S)"}) {
        const ClassPredicate c = parse_class(d);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const auto& p : class_members(c, n)) {
                std::vector<PhiLabel> got;
                for (const auto& child : children(p, InsertionRule::Rightmost, c)) got.push_back(phi_label_of(child, c));
                REQUIRE(got == phi_successors(phi_label_of(p, c)));
            }
        }
    }
    const std::pair<const char*, PsiReading> psi_classes[] = {{"Id(S.i.S)", PsiReading::FirstAscent},
                                                              {"Av(2-14-3,2-41-3)", PsiReading::AroundMaximum}};
    for (const auto& [d, reading] : psi_classes) {
        const ClassPredicate c = parse_class(d);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const auto& p : class_members(c, n)) {
                std::multiset<PsiLabel> got;
                for (const auto& child : children(p, rule_for(reading), c)) got.insert(psi_label_of(child, c, reading));
                const auto expected = psi_successors(psi_label_of(p, c, reading));
                REQUIRE(got == std::multiset<PsiLabel>(expected.begin(), expected.end()));
            }
        }
    }
}

TEST_CASE("named distributions render labels") {
    const auto d = named_level_distribution("psi", 2);
    CHECK(d == std::vector<std::pair<std::string, BigInt>>{{"(2,1)", 1}, {"(3,0)", 1}});
    const auto slmax = named_level_distribution("phi-slmax", 2);
    REQUIRE(slmax.size() == 2);
    CHECK(slmax[0].first == "(3,1,(1),1,2)");
    CHECK(std::string(kSystemNames[0]) == "phi");
}
