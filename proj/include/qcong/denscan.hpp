#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcong/sequences.hpp"

namespace qcong {

/* density_scan accepts X up to this many coefficients. */
inline constexpr std::size_t kMaxScanRange = 1'000'000;

struct DensityCheckpoint {
    std::size_t x = 0;
    std::size_t count = 0;  // #{1 <= n <= x : coefficient(n) == 0 mod u}
    Rational density;       // count / x, exact
};

struct DensityTable {
    SequenceSpec spec;
    std::uint64_t modulus = 0;
    std::vector<DensityCheckpoint> checkpoints;
};

/* Tabulates the divisibility density of the sequence modulo u at each
 * checkpoint. Counts run over 1 <= n <= X so the density is a genuine
 * proportion (the constant term of every eta product is 1 and would
 * otherwise be a permanent off-by-one). Checkpoints must be increasing,
 * positive, and bounded by x_max <= kMaxScanRange. */
DensityTable density_scan(const SequenceSpec& spec, std::uint64_t u, std::size_t x_max,
                          const std::vector<std::size_t>& checkpoints);

/* CSV with header X,count,density_num,density_den and one row per
 * checkpoint. */
std::string to_csv(const DensityTable& table);

}  // namespace qcong
