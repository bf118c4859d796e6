#include "eulerpath/stats.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

namespace eulerpath {

double chi_square_p_value(double statistic, double dof) {
    if (dof <= 0.0) return 1.0;
    if (statistic <= 0.0) return 1.0;
    const boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

double normal99_half_width(double p_hat, std::uint64_t n) {
    if (n == 0) return 1.0;
    constexpr double z99 = 2.5758293035489004;  // two-sided 99% normal quantile
    double variance = p_hat * (1.0 - p_hat);
    if (n < 30 || variance <= 0.0) variance = 0.25;
    return z99 * std::sqrt(variance / static_cast<double>(n));
}

}  // namespace eulerpath
