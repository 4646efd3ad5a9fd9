#ifndef PHI_CACHE_HPP
#define PHI_CACHE_HPP

#include <optional>
#include <string>

namespace phi {

inline constexpr const char* kEngineVersion = "phiq 0.1.0";

// Content-addressed result cache keyed by the canonical graph form plus
// order and mode. Entries store the serialized series; a hit returns bytes
// identical to what a recomputation at the same engine version would store.
// Writes go through a temp file and rename, so readers never see partials.
class ResultCache {
public:
    // dir empty: $PHI_CACHE_DIR if set, else ./.phi-cache.
    explicit ResultCache(std::string dir = "");

    const std::string& dir() const { return dir_; }

    std::optional<std::string> lookup(const std::string& canonical_key, int order,
                                      const std::string& mode) const;

    void store(const std::string& canonical_key, int order, const std::string& mode,
               const std::string& series_json) const;

private:
    std::string entry_path(const std::string& canonical_key, int order, const std::string& mode) const;
    std::string dir_;
};

}  // namespace phi

#endif
