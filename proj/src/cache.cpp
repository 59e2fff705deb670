#include "qcong/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace qcong {

SeriesCache::SeriesCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

SeriesCache SeriesCache::from_environment()
{
    if (const char* env = std::getenv("QCONG_CACHE_DIR"); env != nullptr && *env != '\0')
        return SeriesCache(std::filesystem::path(env));
    std::filesystem::path base;
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
        base = std::filesystem::path(home) / ".cache";
    else
        base = std::filesystem::temp_directory_path();
    return SeriesCache(base / "qcong");
}

std::string SeriesCache::hash_key(const std::string& key)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::filesystem::path SeriesCache::file_for(const std::string& key, CoefficientDomain dom) const
{
    return dir_ / (hash_key(key) + "-" + dom.label() + ".qsc");
}

std::optional<TruncatedSeries> SeriesCache::get(const std::string& key, CoefficientDomain dom,
                                                std::size_t truncation) const
{
    const auto path = file_for(key, dom);
    std::ifstream in(path);
    if (!in) return std::nullopt;

    const auto reject = [&](const char* why) -> std::optional<TruncatedSeries> {
        std::cerr << "qcong: ignoring corrupt cache file " << path.string() << " (" << why << ")\n";
        return std::nullopt;
    };

    std::string magic, version, hash, domain;
    std::size_t stored_T = 0;
    std::string header;
    if (!std::getline(in, header)) return reject("empty file");
    {
        std::istringstream hs(header);
        if (!(hs >> magic >> version >> hash >> domain >> stored_T)) return reject("bad header");
    }
    if (magic != "qscache" || version != "v1") return reject("bad magic");
    if (hash != hash_key(key) || domain != dom.label()) return reject("key mismatch");
    if (stored_T < truncation) return std::nullopt;  // smaller than requested: miss

    TruncatedSeries series(dom, truncation);
    std::string line;
    for (std::size_t n = 0; n <= truncation; ++n) {
        if (!std::getline(in, line) || line.empty()) return reject("short coefficient list");
        try {
            series.set_coefficient(n, Integer(line));
        } catch (const std::invalid_argument&) {
            return reject("unparsable coefficient");
        }
    }
    return series;
}

void SeriesCache::put(const std::string& key, const TruncatedSeries& series) const
{
    const auto dom = series.domain();
    const auto path = file_for(key, dom);

    /* keep a longer stored series in preference to a shorter one */
    if (std::ifstream existing(path); existing) {
        std::string magic, version, hash, domain;
        std::size_t stored_T = 0;
        if (existing >> magic >> version >> hash >> domain >> stored_T && magic == "qscache" &&
            stored_T >= series.truncation() && hash == hash_key(key))
            return;
    }

    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);

    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            std::cerr << "qcong: cannot write cache file " << tmp << "\n";
            return;
        }
        out << "qscache v1 " << hash_key(key) << ' ' << dom.label() << ' ' << series.truncation()
            << '\n';
        for (std::size_t n = 0; n <= series.truncation(); ++n)
            out << series.coefficient(n).get_str() << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::cerr << "qcong: cache rename failed: " << ec.message() << "\n";
        std::filesystem::remove(tmp, ec);
    }
}

}  // namespace qcong
