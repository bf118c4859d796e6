#ifndef EULERPATH_STATS_HPP
#define EULERPATH_STATS_HPP

#include <cstdint>

namespace eulerpath {

// Upper-tail p-value of the chi-square distribution; dof <= 0 degenerates to
// a vacuous 1.0 (no free cells means nothing to test).
double chi_square_p_value(double statistic, double dof);

// Half-width of the 99% normal-approximation confidence interval for a
// Bernoulli proportion.  Below 30 samples the normal approximation is not
// trusted and the worst-case variance 1/4 is used instead.
double normal99_half_width(double p_hat, std::uint64_t n);

}  // namespace eulerpath

#endif  // EULERPATH_STATS_HPP
