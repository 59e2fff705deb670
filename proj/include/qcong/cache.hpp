#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qcong/qseries.hpp"

namespace qcong {

/* Persistent coefficient cache. One versioned text file per (key, domain):
 *
 *   qscache v1 <spec-hash> <domain> <T>
 *   <c_0>
 *   ...
 *   <c_T>
 *
 * A stored series at T' >= T satisfies any request for T. Corrupt files
 * are ignored with a warning, never trusted. Writes go through a temp
 * file plus rename so concurrent processes see whole files only. */
class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path directory);

    /* Directory from QCONG_CACHE_DIR, else <home>/.cache/qcong. */
    static SeriesCache from_environment();

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<TruncatedSeries> get(const std::string& key, CoefficientDomain dom,
                                       std::size_t truncation) const;
    void put(const std::string& key, const TruncatedSeries& series) const;

    /* Stable 64-bit key hash (FNV-1a), hex-encoded. */
    static std::string hash_key(const std::string& key);

private:
    std::filesystem::path file_for(const std::string& key, CoefficientDomain dom) const;

    std::filesystem::path dir_;
};

}  // namespace qcong
