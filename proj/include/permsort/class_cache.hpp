#pragma once

#include "permsort/classes.hpp"

#include <atomic>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permsort {

using ClassMembers = std::shared_ptr<const std::vector<Permutation>>;

// "#permclass v1 <descriptor> n=<n> count=<c>" then one permutation per line
// in space-separated one-line notation.
std::string serialize_class(std::string_view descriptor, std::size_t n, const std::vector<Permutation>& members);

// nullopt if the text is not a well-formed v1 entry for (descriptor, n).
std::optional<std::vector<Permutation>> parse_class_file(std::string_view text, std::string_view descriptor,
                                                         std::size_t n);

/// Flat-file store of class members keyed by (descriptor, n).
///
/// Within one process a key is computed at most once: concurrent requests for
/// the same key wait on the first computation. Entries whose descriptor
/// contains '~' (mutated classes) are kept in memory only. A corrupt or
/// version-mismatched file is reported through the warning sink, recomputed
/// and rewritten.
class ClassCache {
public:
    // Empty `dir` keeps everything in memory.
    explicit ClassCache(std::filesystem::path dir = {});

    ClassMembers get_or_compute(const ClassPredicate& c, std::size_t n, const EnumerationOptions& opts = {});

    std::filesystem::path path_for(std::string_view descriptor, std::size_t n) const;
    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::size_t computations() const noexcept { return computations_; }
    std::size_t disk_hits() const noexcept { return disk_hits_; }

    void set_warning_sink(std::function<void(const std::string&)> sink) { warn_ = std::move(sink); }

    // Directory from PERMSORT_CACHE_DIR, or empty.
    static std::filesystem::path default_dir();

private:
    ClassMembers load_or_compute(const ClassPredicate& c, std::size_t n, const EnumerationOptions& opts);

    std::filesystem::path dir_;
    std::mutex mu_;
    std::map<std::pair<std::string, std::size_t>, std::shared_future<ClassMembers>> entries_;
    std::atomic<std::size_t> computations_{0};
    std::atomic<std::size_t> disk_hits_{0};
    std::function<void(const std::string&)> warn_;
};

} // namespace permsort
