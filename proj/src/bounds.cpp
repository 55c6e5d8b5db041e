#include "loclib/bounds.hpp"

#include <string>

namespace loclib {

static long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

static void check_params(int n, int k, int d) {
    CodeParams{n, k, d}.validate();
}

int d_upper_bound(int n, int k, int r) {
    if (k < 1 || k >= n) throw BadParams("need 1 <= k < n");
    if (r < 1 || r > k) throw BadParams("need 1 <= r <= k");
    return n - k - static_cast<int>(ceil_div(k, r)) + 2;
}

int max_locality_lb(int n, int k, int d) {
    check_params(n, k, d);
    const int J = n - k - d + 2;
    return static_cast<int>(ceil_div(k, J));
}

Rational avg_locality_lb_general(int n, int k, int d) {
    check_params(n, k, d);
    const long long J = n - k - d + 2;
    const long long c = ceil_div(k, J);
    return Rational(c) * (Rational(1) - Rational(J * c - k, n));
}

Rational avg_locality_alpha(int n, int k, int d) {
    check_params(n, k, d);
    const long long J = n - k - d + 2;
    const long long c = ceil_div(k, J);
    const long long f = k / J;
    return Rational((J * c - k) * (f + 1), n);
}

bool rate_condition(int n, int k) {
    if (n < 1) throw BadParams("need n >= 1");
    const long long s = static_cast<long long>(n) - k + 1;
    return 4ll * n > s * s;
}

long long theta_objective_numerator(int n, int k, int d, int theta) {
    const long long J = n - k - d + 2;
    const long long m = n - theta;
    const long long ceil_m = ceil_div(m, J);
    const long long floor_m = m / J;
    const long long a = m + J - J * ceil_m;
    return (J - a) * floor_m * floor_m + a * ceil_m * ceil_m +
           (static_cast<long long>(n) - d * J + 2 * J) * theta;
}

TightBound avg_locality_lb_tight(int n, int k, int d) {
    check_params(n, k, d);
    if (!rate_condition(n, k))
        throw RateConditionViolated("k/n <= (1 - 1/sqrt(n))^2; tight bound not applicable");

    const long long J = n - k - d + 2;
    long long best = -1;
    int best_theta = 0;
    for (int theta = 0; theta <= d - 2; theta++) {
        long long v = theta_objective_numerator(n, k, d, theta);
        if (best < 0 || v < best) {
            best = v;
            best_theta = theta;
        }
    }
    const long long m = n - best_theta;
    const long long a = m + J - J * ceil_div(m, J);
    return {Rational(best - n, n), best_theta, static_cast<int>(a)};
}

std::pair<bool, bool> ceiling_vs_rate(int n, int k, int d) {
    check_params(n, k, d);
    const long long J = n - k - d + 2;
    bool lhs = static_cast<long long>(d) - 3 < ceil_div(k, J);
    return {lhs, rate_condition(n, k)};
}

Rational bound_gap(int n, int k, int d) {
    check_params(n, k, d);
    const long long J = n - k - d + 2;
    const long long c = ceil_div(k, J);
    return Rational(c * (J * c - k), n);
}

PartitionSpec optsqrt_min(long long total, long long parts) {
    if (parts < 1 || total < parts) throw BadParams("need A >= zeta >= 1");
    PartitionSpec spec;
    spec.total = total;
    spec.parts = parts;
    const long long c = ceil_div(total, parts);
    const long long f = total / parts;
    spec.a = total + parts - parts * c;
    spec.min_sum_squares = (parts - spec.a) * f * f + spec.a * c * c;
    return spec;
}

long long brute_force_partition_min(long long total, long long parts) {
    if (parts < 1 || total < parts) throw BadParams("need A >= zeta >= 1");
    if (total > 24 || parts > 6)
        throw BudgetExceeded("enumeration limited to A <= 24, zeta <= 6");

    // Walk all positive compositions recursively.
    long long best = -1;
    std::vector<long long> z(parts);
    auto rec = [&](auto&& self, long long idx, long long remaining, long long acc) -> void {
        if (idx == parts - 1) {
            long long v = acc + remaining * remaining;
            if (best < 0 || v < best) best = v;
            return;
        }
        for (long long zi = 1; zi <= remaining - (parts - 1 - idx); zi++)
            self(self, idx + 1, remaining - zi, acc + zi * zi);
    };
    rec(rec, 0, total, 0);
    return best;
}

BoundReport bound_report(int n, int k, int d) {
    check_params(n, k, d);
    BoundReport r;
    r.n = n;
    r.k = k;
    r.d = d;
    r.J = n - k - d + 2;
    r.r_lb = max_locality_lb(n, k, d);
    r.rbar_lb_general = avg_locality_lb_general(n, k, d);
    r.alpha = avg_locality_alpha(n, k, d);
    r.gap = bound_gap(n, k, d);
    r.rate_condition_holds = rate_condition(n, k);
    if (r.rate_condition_holds) {
        TightBound t = avg_locality_lb_tight(n, k, d);
        r.rbar_lb_tight = t.bound;
        r.theta_star = t.theta_star;
        r.a_theta = t.a_theta;
    }
    return r;
}

}  // namespace loclib
