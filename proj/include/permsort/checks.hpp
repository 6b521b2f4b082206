#pragma once

#include "permsort/class_cache.hpp"
#include "permsort/classes.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

struct CheckRow {
    std::size_t n = 0;
    bool passed = true;
    std::string detail;
    // First counterexample (permutation, label or count); set whenever !passed.
    std::optional<std::string> witness;
    double millis = 0.0;
};

struct CheckReport {
    enum class Kind { Assertion, Experiment };

    std::string name;
    Kind kind = Kind::Assertion;
    std::vector<CheckRow> rows;
    // Experiments only: one-line outcome, prefixed "FINDING:".
    std::string finding;

    bool passed() const noexcept;
};

/// Where checks get their classes from. Overrides replace a descriptor's
/// class (used to inject mutated classes as negative controls).
struct CheckContext {
    EnumerationOptions enumeration;
    ClassCache* cache = nullptr;
    std::map<std::string, ClassPredicate, std::less<>> overrides;
    // Record wall time per row. Off by default so reports are reproducible.
    bool timing = false;

    ClassPredicate resolve(std::string_view descriptor) const;
    std::vector<Permutation> members(std::string_view descriptor, std::size_t n) const;
};

inline constexpr std::size_t kDefaultBruteForceNmax = 8;
inline constexpr std::size_t kDefaultLabelDepth = 12;

CheckReport check_characterization(const CheckContext& ctx, std::size_t nmax);
CheckReport check_enumeration(const CheckContext& ctx, std::size_t nmax);
CheckReport check_conj6(const CheckContext& ctx, std::size_t nmax);
CheckReport check_conj7_enumeration(const CheckContext& ctx, std::size_t nmax);
CheckReport experiment_conj7_statistics(const CheckContext& ctx, std::size_t nmax);
// Tree conformance for n <= nmax, pure label dynamics for n <= depth.
CheckReport check_rewriting_conformance(const CheckContext& ctx, std::size_t nmax,
                                        std::size_t depth = kDefaultLabelDepth);
CheckReport check_active_sites(const CheckContext& ctx, std::size_t nmax);
CheckReport check_bijection_prop(const CheckContext& ctx, std::size_t nmax);
CheckReport check_oracles(const CheckContext& ctx, std::size_t nmax);

// Check names accepted by run_check, in "check all" order.
const std::vector<std::string>& check_names();
CheckReport run_check(std::string_view name, const CheckContext& ctx, std::size_t nmax,
                      std::size_t depth = kDefaultLabelDepth);

std::string format_report(const CheckReport& report, bool with_timing = false);
nlohmann::json report_to_json(const CheckReport& report, bool with_timing = false);

} // namespace permsort
