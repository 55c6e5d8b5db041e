#ifndef LOCLIB_BOUNDS_HPP
#define LOCLIB_BOUNDS_HPP

#include <optional>
#include <utility>

#include "loclib/code.hpp"
#include "loclib/rational.hpp"

namespace loclib {

/*
 * Everything the bound machinery knows about an (n,k,d) parameter set:
 * the max-locality lower bound, the general average-locality lower bound
 * (with its convex-combination coefficient alpha), the gap between them,
 * and - when the rate condition k/n > (1 - 1/sqrt(n))^2 holds - the tight
 * average-locality bound with its minimizing theta. All values are exact
 * rationals.
 */
struct BoundReport {
    int n = 0, k = 0, d = 0;
    int J = 0;
    int r_lb = 0;
    Rational rbar_lb_general;
    Rational alpha;
    Rational gap;
    bool rate_condition_holds = false;
    std::optional<Rational> rbar_lb_tight;
    std::optional<int> theta_star;
    std::optional<int> a_theta;
};

struct PartitionSpec {
    long long total = 0;            // A
    long long parts = 0;            // zeta
    long long a = 0;                // A + zeta - zeta*ceil(A/zeta)
    long long min_sum_squares = 0;  // (zeta-a)*floor^2 + a*ceil^2
};

// d <= n - k - ceil(k/r) + 2 for an LRC with maximum locality r.
int d_upper_bound(int n, int k, int r);

// r >= ceil(k/J).
int max_locality_lb(int n, int k, int d);

// rbar >= ceil(k/J) * (1 - (J*ceil(k/J) - k)/n).
Rational avg_locality_lb_general(int n, int k, int d);

// Coefficient of the convex-combination form of the general bound:
// alpha = (J*ceil(k/J) - k) * (floor(k/J) + 1) / n, with
// rbar >= alpha*floor(k/J) + (1-alpha)*ceil(k/J).
Rational avg_locality_alpha(int n, int k, int d);

// Exact integer test for k/n > (1 - 1/sqrt(n))^2, evaluated as
// 4n > (n-k+1)^2 so no floating point is involved.
bool rate_condition(int n, int k);

// Numerator of the theta objective inside the tight bound (the value before
// dividing by n and subtracting 1).
long long theta_objective_numerator(int n, int k, int d, int theta);

struct TightBound {
    Rational bound;
    int theta_star = 0;
    int a_theta = 0;
};

/*
 * Tight average-locality lower bound: minimize over theta in [0, d-2] of
 *   [(J-a)floor((n-t)/J)^2 + a*ceil((n-t)/J)^2 + (n - dJ + 2J)t] / n - 1,
 * a = n - t + J - J*ceil((n-t)/J). Requires the rate condition; throws
 * RateConditionViolated otherwise (use the general bound in that case).
 * Ties resolve to the smallest theta.
 */
TightBound avg_locality_lb_tight(int n, int k, int d);

// Both sides of the distance-ceiling/rate comparison, evaluated pointwise:
// (d - 3 < ceil(k/J), 4n > (n-k+1)^2). The right side implies the left; the
// converse holds per (n,k) only when quantified over all valid d.
std::pair<bool, bool> ceiling_vs_rate(int n, int k, int d);

// Difference between the max-locality and average-locality lower bounds:
// ceil(k/J) * (J*ceil(k/J) - k) / n; zero exactly when J | k.
Rational bound_gap(int n, int k, int d);

// Minimum of sum z_j^2 over positive integers z_1..z_zeta summing to A,
// in closed form (parts differ by at most one).
PartitionSpec optsqrt_min(long long total, long long parts);

// Same minimum by exhaustive enumeration; the independent oracle for
// optsqrt_min. Limited to A <= 24, zeta <= 6.
long long brute_force_partition_min(long long total, long long parts);

// Assemble the full report for one parameter set.
BoundReport bound_report(int n, int k, int d);

}  // namespace loclib

#endif
