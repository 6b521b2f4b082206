// permsort: command-line front end for the permutation sorting and
// generating-tree engine.

#include "permsort/checks.hpp"
#include "permsort/class_cache.hpp"
#include "permsort/classes.hpp"
#include "permsort/gentree.hpp"
#include "permsort/rewriting.hpp"
#include "permsort/sequences.hpp"
#include "permsort/sorters.hpp"
#include "permsort/statistics.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <memory>

using namespace permsort;

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::unique_ptr<ClassCache> open_cache(const std::string& dir) {
    std::filesystem::path path = dir.empty() ? ClassCache::default_dir() : std::filesystem::path(dir);
    return std::make_unique<ClassCache>(path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stack-sorting, pattern-avoidance and generating-tree toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    EnumerationOptions enumeration;
    app.add_option("--threads", enumeration.threads, "Worker threads (0 = all cores)");
    app.add_option("--cap", enumeration.cap, "Largest n for full S_n enumeration")->capture_default_str();

    // seq
    auto* seq = app.add_subcommand("seq", "Print catalan, west or baxter numbers for n = 1..nmax");
    std::string seq_name;
    unsigned seq_nmax = 0;
    seq->add_option("name", seq_name)->required()->check(CLI::IsMember({"catalan", "west", "baxter"}));
    seq->add_option("nmax", seq_nmax)->required();

    // class
    auto* cls = app.add_subcommand("class", "List a class in the class-cache format");
    std::string cls_descriptor;
    std::size_t cls_n = 0;
    bool cls_count = false;
    std::string cls_cache;
    cls->add_option("descriptor", cls_descriptor, "e.g. Id(S.S) or Av(2-41-3,3-14-2)")->required();
    cls->add_option("n", cls_n)->required();
    cls->add_flag("--count", cls_count, "Print only the number of members");
    cls->add_option("--cache", cls_cache, "Class cache directory (default $PERMSORT_CACHE_DIR)");

    // sort
    auto* srt = app.add_subcommand("sort", "Apply a sorter composition such as S.i.S to a permutation");
    std::string sort_spec;
    std::string sort_perm;
    srt->add_option("spec", sort_spec)->required();
    srt->add_option("permutation", sort_perm, "\"4 1 6 2 5 3\" or 416253")->required();

    // stats
    auto* sts = app.add_subcommand("stats", "Statistics of a permutation, or their distribution over a class");
    std::string stats_names = "conj6";
    std::string stats_perm;
    std::string stats_class;
    std::size_t stats_n = 0;
    sts->add_option("--names", stats_names, "Comma-separated names, conj6 or conj7")->capture_default_str();
    auto* perm_opt = sts->add_option("--perm", stats_perm);
    auto* class_opt = sts->add_option("--class", stats_class);
    sts->add_option("--n", stats_n);
    perm_opt->excludes(class_opt);

    // tree
    auto* tree = app.add_subcommand("tree", "Generating tree of a class under an insertion rule");
    std::string tree_descriptor;
    std::string tree_rule;
    std::size_t tree_nmax = 0;
    std::string tree_labels = "none";
    bool tree_dump = false;
    tree->add_option("descriptor", tree_descriptor)->required();
    tree->add_option("rule", tree_rule)->required()->check(CLI::IsMember({"largest", "smallest", "rightmost", "leftmost"}));
    tree->add_option("nmax", tree_nmax)->required();
    tree->add_option("--labels", tree_labels, "Annotate the dumped level")
        ->check(CLI::IsMember({"none", "phi", "psi-first-ascent", "psi-max"}));
    tree->add_flag("--dump", tree_dump, "Print the permutations of level nmax instead of level sizes");

    // rewrite
    auto* rw = app.add_subcommand("rewrite", "Label multiset of a rewriting system at a given depth");
    std::string rw_system;
    std::size_t rw_depth = 0;
    bool rw_totals = false;
    bool rw_marginal = false;
    rw->add_option("system", rw_system)->required()->check(CLI::IsMember({"phi", "phi-lmax", "phi-ldr", "phi-slmax", "psi"}));
    rw->add_option("depth", rw_depth)->required();
    rw->add_flag("--totals", rw_totals, "Print level totals for depths 1..depth");
    rw->add_flag("--marginal", rw_marginal, "Print the tracked-statistic marginal (refined systems)");

    // check
    auto* chk = app.add_subcommand("check", "Run a verification check, or all of them");
    std::string chk_name;
    std::size_t chk_nmax = kDefaultBruteForceNmax;
    std::size_t chk_depth = kDefaultLabelDepth;
    bool chk_json = false;
    bool chk_timing = false;
    std::string chk_cache;
    std::vector<std::string> chk_choices = check_names();
    chk_choices.push_back("all");
    chk->add_option("name", chk_name)->required()->check(CLI::IsMember(chk_choices));
    chk->add_option("--nmax", chk_nmax, "Largest size for brute-force checks")->capture_default_str();
    chk->add_option("--depth", chk_depth, "Largest depth for label-dynamics checks")->capture_default_str();
    chk->add_flag("--json", chk_json, "Emit JSON instead of a table");
    chk->add_flag("--timing", chk_timing, "Include wall time per row");
    chk->add_option("--cache", chk_cache, "Class cache directory (default $PERMSORT_CACHE_DIR)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*seq) {
            for (unsigned n = 1; n <= seq_nmax; ++n) std::cout << named_sequence(seq_name, n) << '\n';
            return 0;
        }
        if (*cls) {
            const ClassPredicate c = parse_class(cls_descriptor);
            auto cache = open_cache(cls_cache);
            const auto members = cache->get_or_compute(c, cls_n, enumeration);
            if (cls_count) std::cout << members->size() << '\n';
            else std::cout << serialize_class(c.descriptor, cls_n, *members);
            return 0;
        }
        if (*srt) {
            std::cout << to_string(apply_sorter(SorterSpec::parse(sort_spec), parse_permutation(sort_perm))) << '\n';
            return 0;
        }
        if (*sts) {
            const auto names = parse_stat_names(stats_names);
            if (!stats_perm.empty()) {
                const Permutation p = parse_permutation(stats_perm);
                for (StatName s : names) std::cout << to_string(s) << '=' << stat(s, p) << '\n';
                return 0;
            }
            if (stats_class.empty() || stats_n == 0) throw InvalidInputError("stats needs --perm, or --class with --n");
            const auto members = class_members(parse_class(stats_class), stats_n, enumeration);
            std::cout << distribution_csv(names, distribution(names, members));
            return 0;
        }
        if (*tree) {
            const ClassPredicate c = parse_class(tree_descriptor);
            const InsertionRule rule = parse_insertion_rule(tree_rule);
            if (!tree_dump) {
                const auto counts = level_counts(c, rule, tree_nmax, enumeration);
                for (std::size_t k = 0; k < counts.size(); ++k) std::cout << k + 1 << ' ' << counts[k] << '\n';
                return 0;
            }
            const auto levels = tree_levels(c, rule, tree_nmax, enumeration);
            const auto& level = levels.back();
            if (tree_labels == "none") {
                std::cout << serialize_class(c.descriptor, tree_nmax, level);
                return 0;
            }
            for (const auto& p : level) {
                std::string label;
                if (tree_labels == "phi") label = to_string(phi_label_of(p, c));
                else if (tree_labels == "psi-first-ascent") label = to_string(psi_label_of(p, c, PsiReading::FirstAscent));
                else label = to_string(psi_label_of(p, c, PsiReading::AroundMaximum));
                std::cout << to_string(p) << '\t' << label << '\n';
            }
            return 0;
        }
        if (*rw) {
            if (rw_totals) {
                for (const auto& t : named_level_totals(rw_system, rw_depth)) std::cout << t << '\n';
                return 0;
            }
            if (rw_marginal) {
                RewritingSystem<TrackedPhiLabel> sys;
                if (rw_system == "phi-lmax") sys = phi_lmax_system();
                else if (rw_system == "phi-ldr") sys = phi_ldr_system();
                else if (rw_system == "phi-slmax") sys = phi_slmax_system();
                else throw InvalidInputError("--marginal needs a refined system");
                std::cout << "q,multiplicity\n";
                for (const auto& [q, mult] : tracked_stat_distribution(sys, rw_depth)) std::cout << q << ',' << mult << '\n';
                return 0;
            }
            std::cout << "label,multiplicity\n";
            for (const auto& [label, mult] : named_level_distribution(rw_system, rw_depth))
                std::cout << csv_quote(label) << ',' << mult << '\n';
            return 0;
        }
        if (*chk) {
            auto cache = open_cache(chk_cache);
            CheckContext ctx;
            ctx.enumeration = enumeration;
            ctx.cache = cache.get();
            ctx.timing = chk_timing;
            const std::vector<std::string> names =
                chk_name == "all" ? check_names() : std::vector<std::string>{chk_name};
            bool ok = true;
            nlohmann::json all = nlohmann::json::array();
            for (const auto& name : names) {
                const CheckReport report = run_check(name, ctx, chk_nmax, chk_depth);
                if (report.kind == CheckReport::Kind::Assertion) ok = ok && report.passed();
                if (chk_json) all.push_back(report_to_json(report, chk_timing));
                else std::cout << format_report(report, chk_timing) << std::flush;
            }
            if (chk_json) std::cout << (names.size() == 1 ? all.front() : all).dump(2) << '\n';
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
