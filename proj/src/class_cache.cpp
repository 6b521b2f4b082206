#include "permsort/class_cache.hpp"

#include "permsort/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace permsort {

namespace {

constexpr std::string_view kMagic = "#permclass";
constexpr std::string_view kVersion = "v1";

std::string header_line(std::string_view descriptor, std::size_t n, std::size_t count) {
    return std::string(kMagic) + " " + std::string(kVersion) + " " + std::string(descriptor) + " n=" +
           std::to_string(n) + " count=" + std::to_string(count);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::string serialize_class(std::string_view descriptor, std::size_t n, const std::vector<Permutation>& members) {
    std::string out = header_line(descriptor, n, members.size());
    out += '\n';
    for (const auto& p : members) {
        out += to_string(p);
        out += '\n';
    }
    return out;
}

std::optional<std::vector<Permutation>> parse_class_file(std::string_view text, std::string_view descriptor,
                                                         std::size_t n) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    const std::string prefix = std::string(kMagic) + " " + std::string(kVersion) + " " + std::string(descriptor) +
                               " n=" + std::to_string(n) + " count=";
    if (line.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    const std::string count_text = line.substr(prefix.size());
    if (count_text.empty() || count_text.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const std::size_t count = std::stoull(count_text);

    std::vector<Permutation> members;
    members.reserve(count);
    while (std::getline(in, line)) {
        try {
            Permutation p = parse_permutation(line);
            if (p.size() != n) return std::nullopt;
            members.push_back(std::move(p));
        } catch (const InvalidInputError&) {
            return std::nullopt;
        }
    }
    if (members.size() != count) return std::nullopt;
    if (serialize_class(descriptor, n, members) != text) return std::nullopt;
    return members;
}

ClassCache::ClassCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    warn_ = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
}

std::filesystem::path ClassCache::default_dir() {
    if (const char* env = std::getenv("PERMSORT_CACHE_DIR"); env && *env) return env;
    return {};
}

std::filesystem::path ClassCache::path_for(std::string_view descriptor, std::size_t n) const {
    std::string stem;
    for (char ch : descriptor) stem += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
    std::ostringstream name;
    name << stem << '-' << std::hex << fnv1a(descriptor) << std::dec << ".n" << n << ".perms";
    return dir_ / name.str();
}

ClassMembers ClassCache::get_or_compute(const ClassPredicate& c, std::size_t n, const EnumerationOptions& opts) {
    std::promise<ClassMembers> promise;
    std::shared_future<ClassMembers> future;
    bool owner = false;
    {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(c.descriptor, n);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            future = promise.get_future().share();
            entries_.emplace(std::move(key), future);
            owner = true;
        } else {
            future = it->second;
        }
    }
    if (owner) {
        try {
            promise.set_value(load_or_compute(c, n, opts));
        } catch (...) {
            promise.set_exception(std::current_exception());
        }
    }
    return future.get();
}

ClassMembers ClassCache::load_or_compute(const ClassPredicate& c, std::size_t n, const EnumerationOptions& opts) {
    const bool persist = !dir_.empty() && c.descriptor.find('~') == std::string::npos;
    const auto path = persist ? path_for(c.descriptor, n) : std::filesystem::path{};
    if (persist) {
        if (auto text = read_file(path)) {
            if (auto members = parse_class_file(*text, c.descriptor, n)) {
                ++disk_hits_;
                return std::make_shared<const std::vector<Permutation>>(std::move(*members));
            }
            warn_("discarding corrupt or outdated cache entry " + path.string());
        }
    }
    auto members = std::make_shared<const std::vector<Permutation>>(class_members(c, n, opts));
    ++computations_;
    if (persist) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::ostringstream tmp_name;
        tmp_name << path.string() << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id());
        const std::filesystem::path tmp = tmp_name.str();
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << serialize_class(c.descriptor, n, *members);
        }
        std::filesystem::rename(tmp, path, ec);
        if (ec) warn_("could not write cache entry " + path.string() + ": " + ec.message());
    }
    return members;
}

} // namespace permsort
