#include "qcong/denscan.hpp"

#include <stdexcept>

namespace qcong {

DensityTable density_scan(const SequenceSpec& spec, std::uint64_t u, std::size_t x_max,
                          const std::vector<std::size_t>& checkpoints)
{
    if (u < 1) throw std::invalid_argument("density_scan: modulus must be positive");
    if (x_max < 1 || x_max > kMaxScanRange)
        throw std::invalid_argument("density_scan: scan range out of bounds");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > x_max ||
            (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
            throw std::invalid_argument("density_scan: checkpoints must be increasing and <= x_max");
    }

    DensityTable table{spec, u, {}};

    /* modulus 1: everything is divisible, no series needed */
    if (u == 1) {
        for (std::size_t x : checkpoints)
            table.checkpoints.push_back({x, x, Rational(1)});
        return table;
    }

    const TruncatedSeries series = coefficients(spec, x_max, CoefficientDomain::modular(u));
    std::size_t count = 0;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= x_max && next < checkpoints.size(); ++n) {
        if (series.mod_data()[n] == 0) ++count;
        while (next < checkpoints.size() && checkpoints[next] == n) {
            table.checkpoints.push_back(
                {n, count, make_rational(Integer(static_cast<unsigned long>(count)),
                                         Integer(static_cast<unsigned long>(n)))});
            ++next;
        }
    }
    return table;
}

std::string to_csv(const DensityTable& table)
{
    std::string out = "X,count,density_num,density_den\n";
    for (const auto& cp : table.checkpoints) {
        out += std::to_string(cp.x);
        out += ',';
        out += std::to_string(cp.count);
        out += ',';
        out += cp.density.get_num().get_str();
        out += ',';
        out += cp.density.get_den().get_str();
        out += '\n';
    }
    return out;
}

}  // namespace qcong
