#include "permsort/checks.hpp"

#include "permsort/errors.hpp"
#include "permsort/gentree.hpp"
#include "permsort/rewriting.hpp"
#include "permsort/sequences.hpp"
#include "permsort/sorters.hpp"
#include "permsort/statistics.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace permsort {

namespace {

using Members = std::vector<Permutation>;

// Records the first failure of a row and ignores later ones.
void fail(CheckRow& row, std::string detail, std::string witness) {
    if (!row.passed) return;
    row.passed = false;
    row.detail = std::move(detail);
    row.witness = std::move(witness);
}

template <typename Body>
CheckReport run_rows(std::string name, CheckReport::Kind kind, const CheckContext& ctx, std::size_t nmax, Body body) {
    CheckReport report{std::move(name), kind, std::vector<CheckRow>(nmax), {}};
    parallel_for(nmax, ctx.enumeration.threads, [&](std::size_t k) {
        CheckRow& row = report.rows[k];
        row.n = k + 1;
        const auto start = std::chrono::steady_clock::now();
        body(row.n, row);
        row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });
    return report;
}

// First permutation in exactly one of two sorted lists, with the side it is on.
std::optional<std::string> set_difference_witness(const Members& a, std::string_view a_name, const Members& b,
                                                  std::string_view b_name) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            return to_compact_string(a[i]) + " in " + std::string(a_name) + " only";
        if (i == a.size() || b[j] < a[i])
            return to_compact_string(b[j]) + " in " + std::string(b_name) + " only";
        ++i;
        ++j;
    }
    return std::nullopt;
}

std::string vector_text(const StatVector& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(v[k]);
    }
    return out + ")";
}

// First statistic vector whose multiplicity differs, with an example
// permutation from the class holding the surplus.
std::optional<std::string> distribution_witness(std::span<const StatName> names, const Members& a,
                                                std::string_view a_name, const Members& b, std::string_view b_name) {
    const auto da = distribution(names, a);
    const auto db = distribution(names, b);
    if (da == db) return std::nullopt;
    std::set<StatVector> keys;
    for (const auto& [v, c] : da) keys.insert(v);
    for (const auto& [v, c] : db) keys.insert(v);
    for (const auto& v : keys) {
        const auto ca = da.count(v) ? da.at(v) : 0;
        const auto cb = db.count(v) ? db.at(v) : 0;
        if (ca == cb) continue;
        const bool a_more = ca > cb;
        const Members& src = a_more ? a : b;
        std::string example;
        for (const auto& p : src)
            if (stat_vector(names, p) == v) {
                example = to_compact_string(p);
                break;
            }
        return vector_text(v) + ": " + std::to_string(ca) + " in " + std::string(a_name) + " vs " +
               std::to_string(cb) + " in " + std::string(b_name) + ", e.g. " + example + " in " +
               std::string(a_more ? a_name : b_name);
    }
    return std::nullopt;
}

std::string count_witness(std::string_view descriptor, std::size_t got, const BigInt& expected) {
    return "|" + std::string(descriptor) + "| = " + std::to_string(got) + ", expected " + expected.str();
}

template <typename Label>
std::vector<Label> sorted(std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct CharacterizationItem {
    const char* name;
    std::vector<std::string_view> sorted_classes;
    std::vector<std::string_view> pattern_classes;
};

const std::vector<CharacterizationItem>& characterization_items() {
    static const std::vector<CharacterizationItem> items = {
        {"(i)", {"Id(S.S)", "Id(S.i.c.r.S)"}, {"Av(2341,3^5241)"}},
        {"(ii)", {"Id(S.c.S)", "Id(S.i.r.S)"}, {"Av(231)"}},
        {"(iii)", {"Id(S.r.S)", "Id(S.i.c.S)"}, {"Av(1342,31-4-2)", "Av(1342,3^5142)"}},
        {"(iv)", {"Id(S.i.S)", "Id(S.r.c.S)"}, {"Av(3412,3-4-21)"}},
    };
    return items;
}

struct PhiRefinement {
    RewritingSystem<TrackedPhiLabel> system;
    StatName stat;
};

const std::vector<PhiRefinement>& phi_refinements() {
    static const std::vector<PhiRefinement> r = {
        {phi_lmax_system(), StatName::Lmax},
        {phi_ldr_system(), StatName::Ldr},
        {phi_slmax_system(), StatName::Slmax},
    };
    return r;
}

} // namespace

bool CheckReport::passed() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

ClassPredicate CheckContext::resolve(std::string_view descriptor) const {
    if (auto it = overrides.find(descriptor); it != overrides.end()) return it->second;
    return parse_class(descriptor);
}

std::vector<Permutation> CheckContext::members(std::string_view descriptor, std::size_t n) const {
    const ClassPredicate c = resolve(descriptor);
    if (cache) return *cache->get_or_compute(c, n, enumeration);
    return class_members(c, n, enumeration);
}

CheckReport check_characterization(const CheckContext& ctx, std::size_t nmax) {
    return run_rows("characterization", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        std::ostringstream detail;
        for (const auto& item : characterization_items()) {
            const auto reference_name = item.sorted_classes.front();
            const Members reference = ctx.members(reference_name, n);
            detail << (detail.tellp() > 0 ? " " : "") << item.name << "=" << reference.size();
            std::vector<std::string_view> others(item.sorted_classes.begin() + 1, item.sorted_classes.end());
            others.insert(others.end(), item.pattern_classes.begin(), item.pattern_classes.end());
            for (auto other : others) {
                if (auto w = set_difference_witness(reference, reference_name, ctx.members(other, n), other))
                    fail(row, std::string(item.name) + " " + std::string(reference_name) + " != " + std::string(other), *w);
            }
        }
        if (row.passed) row.detail = detail.str();
    });
}

CheckReport check_enumeration(const CheckContext& ctx, std::size_t nmax) {
    return run_rows("enumeration", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        const unsigned un = static_cast<unsigned>(n);
        const std::pair<std::string_view, BigInt> expectations[] = {
            {classes::kTwoStack, west_two_stack(un)},
            {classes::kSrS, west_two_stack(un)},
            {classes::kScS, catalan(un)},
            {classes::kSiS, baxter(un)},
        };
        std::ostringstream detail;
        for (const auto& [descriptor, expected] : expectations) {
            const std::size_t got = ctx.members(descriptor, n).size();
            detail << (detail.tellp() > 0 ? " " : "") << descriptor << "=" << got;
            if (BigInt(got) != expected) fail(row, "count mismatch", count_witness(descriptor, got, expected));
        }
        if (row.passed) row.detail = detail.str();
    });
}

CheckReport check_conj6(const CheckContext& ctx, std::size_t nmax) {
    return run_rows("conj6", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        const Members a = ctx.members(classes::kTwoStack, n);
        const Members b = ctx.members(classes::kSrS, n);
        if (a.size() != b.size())
            fail(row, "sizes differ",
                 std::string(classes::kTwoStack) + "=" + std::to_string(a.size()) + " " + std::string(classes::kSrS) +
                     "=" + std::to_string(b.size()));
        if (auto w = distribution_witness(kFifteenTuple, a, classes::kTwoStack, b, classes::kSrS))
            fail(row, "15-tuple distributions differ", *w);
        if (row.passed)
            row.detail = "size " + std::to_string(a.size()) + ", " +
                         std::to_string(distribution(kFifteenTuple, a).size()) + " distinct 15-tuples";
    });
}

CheckReport check_conj7_enumeration(const CheckContext& ctx, std::size_t nmax) {
    return run_rows("conj7-enum", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        const BigInt expected = baxter(static_cast<unsigned>(n));
        for (auto descriptor : {classes::kSiS, classes::kMaxSplit, classes::kBaxter}) {
            const std::size_t got = ctx.members(descriptor, n).size();
            if (BigInt(got) != expected) fail(row, "not a Baxter count", count_witness(descriptor, got, expected));
        }
        if (row.passed) row.detail = "all three classes have " + expected.str() + " members";
    });
}

CheckReport experiment_conj7_statistics(const CheckContext& ctx, std::size_t nmax) {
    auto report = run_rows("conj7-stats", CheckReport::Kind::Experiment, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        const Members a = ctx.members(classes::kSiS, n);
        const Members b = ctx.members(classes::kBaxter, n);
        if (auto w = distribution_witness(kDesLmaxComp, a, classes::kSiS, b, classes::kBaxter))
            fail(row, "(des,lmax,comp) distributions differ", *w);
        else
            row.detail = "equal over " + std::to_string(a.size()) + " permutations";
    });
    auto bad = std::find_if(report.rows.begin(), report.rows.end(), [](const CheckRow& r) { return !r.passed; });
    if (bad == report.rows.end())
        report.finding = "FINDING: (des,lmax,comp) is equidistributed on " + std::string(classes::kSiS) + " and " +
                         std::string(classes::kBaxter) + " for n=1.." + std::to_string(nmax);
    else
        report.finding = "FINDING: counterexample at n=" + std::to_string(bad->n) + ": " + *bad->witness;
    return report;
}

CheckReport check_rewriting_conformance(const CheckContext& ctx, std::size_t nmax, std::size_t depth) {
    const std::size_t rows = std::max(nmax, depth);
    const auto phi_totals = level_totals(phi_system(), rows);
    const auto psi_totals = level_totals(psi_system(), rows);

    return run_rows("rewriting", CheckReport::Kind::Assertion, ctx, rows, [&](std::size_t n, CheckRow& row) {
        const unsigned un = static_cast<unsigned>(n);
        if (n <= depth) {
            if (phi_totals[n - 1] != west_two_stack(un))
                fail(row, "phi level total", "phi depth " + std::to_string(n) + " total " + phi_totals[n - 1].str());
            if (psi_totals[n - 1] != baxter(un))
                fail(row, "psi level total", "psi depth " + std::to_string(n) + " total " + psi_totals[n - 1].str());
        }
        if (n > nmax) {
            if (row.passed) row.detail = "label dynamics only: " + phi_totals[n - 1].str() + " / " + psi_totals[n - 1].str();
            return;
        }

        std::size_t members_checked = 0;
        for (auto descriptor : {classes::kTwoStack, classes::kSrS}) {
            const ClassPredicate c = ctx.resolve(descriptor);
            const Members members = ctx.members(descriptor, n);
            members_checked += members.size();
            if (BigInt(members.size()) != phi_totals[n - 1])
                fail(row, "tree level size", count_witness(descriptor, members.size(), phi_totals[n - 1]));
            std::vector<std::map<int, BigInt>> marginals(phi_refinements().size());
            for (const auto& p : members) try {
                const PhiLabel label = phi_label_of(p, c);
                const Members kids = children(p, InsertionRule::Rightmost, c);
                std::vector<PhiLabel> kid_labels;
                for (const auto& q : kids) kid_labels.push_back(phi_label_of(q, c));
                if (sorted(kid_labels) != sorted(phi_successors(label)))
                    fail(row, std::string(descriptor) + " children labels != phi successors",
                         to_compact_string(p) + " " + to_string(label));
                for (std::size_t r = 0; r < phi_refinements().size(); ++r) {
                    const auto& ref = phi_refinements()[r];
                    const TrackedPhiLabel tracked{label, stat(ref.stat, p), static_cast<int>(n)};
                    marginals[r][tracked.q] += 1;
                    std::vector<TrackedPhiLabel> kid_tracked;
                    for (std::size_t k = 0; k < kids.size(); ++k)
                        kid_tracked.push_back({kid_labels[k], stat(ref.stat, kids[k]), static_cast<int>(n + 1)});
                    if (sorted(kid_tracked) != sorted(ref.system.successors(tracked)))
                        fail(row, std::string(descriptor) + " children != " + ref.system.name + " successors",
                             to_compact_string(p) + " " + ref.system.format(tracked));
                }
            } catch (const DomainError& e) {
                fail(row, std::string(descriptor) + " member has no valid label", to_compact_string(p) + ": " + e.what());
            }
            for (std::size_t r = 0; r < phi_refinements().size(); ++r) {
                const auto& ref = phi_refinements()[r];
                if (marginals[r] != tracked_stat_distribution(ref.system, n))
                    fail(row, ref.system.name + " marginal != " + std::string(to_string(ref.stat)) + " on " +
                                  std::string(descriptor),
                         ref.system.name + " depth " + std::to_string(n));
            }
        }

        // Refined systems project onto R_Φ on every label of this level.
        for (const auto& ref : phi_refinements()) {
            for (const auto& [label, mult] : level_label_distribution(ref.system, n)) {
                std::vector<PhiLabel> projected;
                for (const auto& s : ref.system.successors(label)) projected.push_back(s.core);
                if (projected != phi_successors(label.core))
                    fail(row, ref.system.name + " does not project onto phi", ref.system.format(label));
            }
        }

        const std::pair<std::string_view, PsiReading> psi_classes[] = {
            {classes::kSiS, PsiReading::FirstAscent},
            {classes::kMaxSplit, PsiReading::AroundMaximum},
        };
        for (const auto& [descriptor, reading] : psi_classes) {
            const ClassPredicate c = ctx.resolve(descriptor);
            const Members members = ctx.members(descriptor, n);
            members_checked += members.size();
            if (BigInt(members.size()) != psi_totals[n - 1])
                fail(row, "tree level size", count_witness(descriptor, members.size(), psi_totals[n - 1]));
            for (const auto& p : members) try {
                const PsiLabel label = psi_label_of(p, c, reading);
                std::vector<PsiLabel> kid_labels;
                for (const auto& q : children(p, rule_for(reading), c)) kid_labels.push_back(psi_label_of(q, c, reading));
                if (sorted(kid_labels) != sorted(psi_successors(label)))
                    fail(row, std::string(descriptor) + " children labels != psi successors",
                         to_compact_string(p) + " " + to_string(label));
            } catch (const DomainError& e) {
                fail(row, std::string(descriptor) + " member has no valid label", to_compact_string(p) + ": " + e.what());
            }
        }
        if (row.passed) row.detail = std::to_string(members_checked) + " member label expansions conform";
    });
}

CheckReport check_active_sites(const CheckContext& ctx, std::size_t nmax) {
    return run_rows("active-sites", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        auto site_witness = [](const Permutation& p, std::size_t s) {
            return to_compact_string(p) + " site " + std::to_string(s);
        };
        for (auto descriptor : {classes::kTwoStack, classes::kSrS}) {
            const ClassPredicate c = ctx.resolve(descriptor);
            const bool two_stack = descriptor == classes::kTwoStack;
            for (const auto& p : ctx.members(descriptor, n)) {
                const auto flags = activity(p, InsertionRule::Rightmost, c);
                const auto forced = two_stack ? criteria::forced_active_two_stack(p) : criteria::forced_active_srs(p);
                for (std::size_t s : forced)
                    if (!flags[s - 1]) fail(row, std::string(descriptor) + " forced site inactive", site_witness(p, s));
            }
        }
        {
            const ClassPredicate c = ctx.resolve(classes::kSiS);
            for (const auto& p : ctx.members(classes::kSiS, n)) {
                const auto flags = activity(p, InsertionRule::Smallest, c);
                for (std::size_t s = 1; s <= n + 1; ++s)
                    if (flags[s - 1] == criteria::sis_site_inactive(p, s))
                        fail(row, "Id(S.i.S) bca criterion disagrees", site_witness(p, s));
            }
        }
        {
            const ClassPredicate c = ctx.resolve(classes::kMaxSplit);
            for (const auto& p : ctx.members(classes::kMaxSplit, n)) {
                const auto flags = activity(p, InsertionRule::Largest, c);
                const std::size_t m = static_cast<std::size_t>(
                    std::find(p.word().begin(), p.word().end(), static_cast<int>(n)) - p.word().begin());
                if (!flags[m + 1]) fail(row, "site right of n inactive", site_witness(p, m + 2));
                for (std::size_t s = 1; s <= m + 1; ++s)
                    if (flags[s - 1] != criteria::max_split_left_site_active(p, s))
                        fail(row, "left-to-right maxima criterion disagrees", site_witness(p, s));
                for (std::size_t t = 1; t <= n + 1; ++t) {
                    if (!flags[t - 1]) continue;
                    const Permutation child = insert(p, {InsertionRule::Largest, t});
                    if (!c(child)) continue;
                    const auto child_flags = activity(child, InsertionRule::Largest, c);
                    for (std::size_t u = t + 1; u <= n + 2; ++u)
                        if (child_flags[u - 1] != flags[u - 2])
                            fail(row, "activity right of the inserted maximum changed",
                                 site_witness(p, t) + " -> " + site_witness(child, u));
                }
            }
        }
        if (row.passed) row.detail = "closed forms agree";
    });
}

CheckReport check_bijection_prop(const CheckContext& ctx, std::size_t nmax) {
    const Symmetry ci = compose(Symmetry::C, Symmetry::I);
    return run_rows("bijection", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        const std::pair<std::string_view, std::string_view> pairs[] = {
            {"Av(3214,^24135)", classes::kTwoStack},
            {"Av(3241,^24153)", classes::kSrS},
        };
        for (const auto& [source, target] : pairs) {
            const Members from = ctx.members(source, n);
            std::set<Permutation> image;
            for (const auto& p : from) image.insert(apply_symmetry(ci, p));
            if (image.size() != from.size()) fail(row, "c.i not injective", std::string(source));
            const Members image_list(image.begin(), image.end());
            const std::string image_name = "c.i(" + std::string(source) + ")";
            if (auto w = set_difference_witness(image_list, image_name, ctx.members(target, n), target))
                fail(row, image_name + " != " + std::string(target), *w);
        }
        if (row.passed) row.detail = "c.i maps both avoidance classes onto the sorted classes";
    });
}

CheckReport check_oracles(const CheckContext& ctx, std::size_t nmax) {
    return run_rows("oracles", CheckReport::Kind::Assertion, ctx, nmax, [&](std::size_t n, CheckRow& row) {
        const Members all = ctx.members("All", n);
        std::size_t k = 0;
        bool complete = true;
        for_each_permutation(n, [&](const Permutation& p) {
            if (!complete) return;
            if (k >= all.size() || all[k] != p) {
                complete = false;
                fail(row, "domain is not all of S_n", to_compact_string(p) + " missing");
                return;
            }
            ++k;
        });
        if (complete && k != all.size()) fail(row, "domain is not all of S_n", to_compact_string(all[k]) + " extra");
        for (const auto& p : all) {
            if (stack_sort_automaton(p.values()) != stack_sort(p.values()))
                fail(row, "stack automaton != recursive stack sort", to_compact_string(p));
            if (tack_sort(p) != stack_sort(reverse(p))) fail(row, "T != S.r", to_compact_string(p));
        }
        if (row.passed) row.detail = std::to_string(all.size()) + " permutations";
    });
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "characterization", "enumeration", "conj6",  "conj7-enum", "conj7-stats",
        "rewriting",        "active-sites", "bijection", "oracles",
    };
    return names;
}

CheckReport run_check(std::string_view name, const CheckContext& ctx, std::size_t nmax, std::size_t depth) {
    if (name == "characterization") return check_characterization(ctx, nmax);
    if (name == "enumeration") return check_enumeration(ctx, nmax);
    if (name == "conj6") return check_conj6(ctx, nmax);
    if (name == "conj7-enum") return check_conj7_enumeration(ctx, nmax);
    if (name == "conj7-stats") return experiment_conj7_statistics(ctx, nmax);
    if (name == "rewriting") return check_rewriting_conformance(ctx, nmax, depth);
    if (name == "active-sites") return check_active_sites(ctx, nmax);
    if (name == "bijection") return check_bijection_prop(ctx, nmax);
    if (name == "oracles") return check_oracles(ctx, nmax);
    throw InvalidInputError("unknown check '" + std::string(name) + "'");
}

std::string format_report(const CheckReport& report, bool with_timing) {
    std::ostringstream out;
    out << "check " << report.name << (report.kind == CheckReport::Kind::Experiment ? " (experiment)" : "") << '\n';
    for (const auto& row : report.rows) {
        out << "  n=" << std::setw(2) << row.n << "  " << (row.passed ? "PASS" : "FAIL") << "  " << row.detail;
        if (row.witness) out << "  witness: " << *row.witness;
        if (with_timing) out << "  [" << std::fixed << std::setprecision(1) << row.millis << " ms]";
        out << '\n';
    }
    if (report.kind == CheckReport::Kind::Experiment) out << report.finding << '\n';
    else out << "RESULT " << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

nlohmann::json report_to_json(const CheckReport& report, bool with_timing) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r = {{"n", row.n}, {"passed", row.passed}, {"detail", row.detail}};
        r["witness"] = row.witness ? nlohmann::json(*row.witness) : nlohmann::json(nullptr);
        if (with_timing) r["millis"] = row.millis;
        rows.push_back(std::move(r));
    }
    nlohmann::json j = {
        {"check", report.name},
        {"kind", report.kind == CheckReport::Kind::Experiment ? "experiment" : "assertion"},
        {"passed", report.passed()},
        {"rows", std::move(rows)},
    };
    if (report.kind == CheckReport::Kind::Experiment) j["finding"] = report.finding;
    return j;
}

} // namespace permsort
