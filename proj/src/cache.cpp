#include "phi/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phi {

namespace {

std::string fnv1a64_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) {
        const char* env = std::getenv("PHI_CACHE_DIR");
        dir_ = env && *env ? env : "./.phi-cache";
    }
}

std::string ResultCache::entry_path(const std::string& canonical_key, int order,
                                    const std::string& mode) const {
    std::string full = canonical_key + "|" + std::to_string(order) + "|" + mode;
    return dir_ + "/" + fnv1a64_hex(full) + "_" + std::to_string(order) + "_" + mode + ".json";
}

std::optional<std::string> ResultCache::lookup(const std::string& canonical_key, int order,
                                               const std::string& mode) const {
    std::ifstream in(entry_path(canonical_key, order, mode));
    if (!in.good()) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        nlohmann::json j = nlohmann::json::parse(ss.str());
        if (j.at("key").get<std::string>() != canonical_key) return std::nullopt;  // digest collision
        if (j.at("order").get<int>() != order || j.at("mode").get<std::string>() != mode) return std::nullopt;
        if (j.at("engine").get<std::string>() != kEngineVersion) return std::nullopt;
        return j.at("series").dump();
    } catch (const std::exception&) {
        return std::nullopt;  // damaged entry: treat as miss
    }
}

void ResultCache::store(const std::string& canonical_key, int order, const std::string& mode,
                        const std::string& series_json) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::json j;
    j["key"] = canonical_key;
    j["order"] = order;
    j["mode"] = mode;
    j["engine"] = kEngineVersion;
    j["timestamp"] = static_cast<long long>(std::time(nullptr));
    j["series"] = nlohmann::json::parse(series_json);
    std::string path = entry_path(canonical_key, order, mode);
    std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump();
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::remove(tmp.c_str());
}

}  // namespace phi
