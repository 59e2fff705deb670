#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "qcong/cache.hpp"

using namespace qcong;

namespace {

std::filesystem::path fresh_dir()
{
    static std::mt19937_64 rng(std::random_device{}());
    auto dir = std::filesystem::temp_directory_path() /
               ("qcong-cache-test-" + std::to_string(rng()));
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("put then get round-trips bit-exactly")
{
    const SeriesCache cache(fresh_dir());
    const auto series = TruncatedSeries::from_coefficients(
        CoefficientDomain::exact(), {Integer("1"), Integer("-42"), Integer("173333430318331391232")});
    cache.put("test-key", series);
    const auto hit = cache.get("test-key", CoefficientDomain::exact(), 2);
    REQUIRE(hit.has_value());
    CHECK(!first_difference(*hit, series));
    std::filesystem::remove_all(cache.directory());
}

TEST_CASE("a request beyond the stored truncation misses")
{
    const SeriesCache cache(fresh_dir());
    cache.put("k", TruncatedSeries::constant_one(CoefficientDomain::exact(), 5));
    CHECK(!cache.get("k", CoefficientDomain::exact(), 6).has_value());
    CHECK(cache.get("k", CoefficientDomain::exact(), 5).has_value());
    std::filesystem::remove_all(cache.directory());
}

TEST_CASE("a longer stored series satisfies a shorter request")
{
    const SeriesCache cache(fresh_dir());
    const auto series = TruncatedSeries::from_coefficients(CoefficientDomain::modular(7),
                                                           {1, 2, 3, 4, 5, 6, 0, 1});
    cache.put("k", series);
    const auto hit = cache.get("k", CoefficientDomain::modular(7), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->truncation() == 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(hit->coefficient(n) == series.coefficient(n));
    std::filesystem::remove_all(cache.directory());
}

TEST_CASE("exact and modular entries never alias")
{
    const SeriesCache cache(fresh_dir());
    cache.put("k", TruncatedSeries::from_coefficients(CoefficientDomain::exact(), {9, 9}));
    cache.put("k", TruncatedSeries::from_coefficients(CoefficientDomain::modular(5), {4, 4}));
    const auto exact = cache.get("k", CoefficientDomain::exact(), 1);
    const auto modular = cache.get("k", CoefficientDomain::modular(5), 1);
    REQUIRE(exact.has_value());
    REQUIRE(modular.has_value());
    CHECK(exact->coefficient(0) == 9);
    CHECK(modular->coefficient(0) == 4);
    CHECK(!cache.get("k", CoefficientDomain::modular(7), 1).has_value());
    std::filesystem::remove_all(cache.directory());
}

TEST_CASE("put never downgrades a longer entry")
{
    const SeriesCache cache(fresh_dir());
    const auto longer = TruncatedSeries::from_coefficients(CoefficientDomain::exact(), {1, 2, 3, 4});
    cache.put("k", longer);
    cache.put("k", TruncatedSeries::from_coefficients(CoefficientDomain::exact(), {7}));
    const auto hit = cache.get("k", CoefficientDomain::exact(), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->coefficient(0) == 1);
    CHECK(hit->coefficient(3) == 4);
    std::filesystem::remove_all(cache.directory());
}

TEST_CASE("corrupt cache files are ignored")
{
    const SeriesCache cache(fresh_dir());
    cache.put("k", TruncatedSeries::constant_one(CoefficientDomain::exact(), 3));

    /* find the entry and truncate it mid-list */
    for (const auto& entry : std::filesystem::directory_iterator(cache.directory())) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "qscache v1 deadbeefdeadbeef exact 3\n1\nnot-a-number\n";
    }
    CHECK(!cache.get("k", CoefficientDomain::exact(), 3).has_value());

    /* and a file with the wrong magic */
    for (const auto& entry : std::filesystem::directory_iterator(cache.directory())) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "garbage\n";
    }
    CHECK(!cache.get("k", CoefficientDomain::exact(), 3).has_value());
    std::filesystem::remove_all(cache.directory());
}

TEST_CASE("key hashing is stable")
{
    CHECK(SeriesCache::hash_key("eta:M=2;r=-2,-2") == SeriesCache::hash_key("eta:M=2;r=-2,-2"));
    CHECK(SeriesCache::hash_key("a") != SeriesCache::hash_key("b"));
}
