#include "loclib/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace loclib {

static long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

Rational ConstructionPlan::expected_avg() const {
    long long sum = 0, count = 0;
    for (auto [loc, cnt] : expected_profile) {
        sum += static_cast<long long>(loc) * cnt;
        count += cnt;
    }
    if (count != params.n) throw Error("expected profile does not cover n symbols");
    return Rational(sum, params.n);
}

std::set<int> applicability(int n, int k, int d) {
    CodeParams{n, k, d}.validate();
    const int J = n - k - d + 2;
    const int c = static_cast<int>(ceil_div(k, J));

    std::set<int> classes;
    if ((d - 2) % (c + 1) == 0) classes.insert(1);
    if ((k - 1) % J == 0) {
        const int theta = (d - 2) % (c + 1);
        if ((d - 2) / (c + 1) >= c - theta) classes.insert(2);
    }
    if (rate_condition(n, k)) classes.insert(3);
    return classes;
}

// Append `count` contiguous groups of the given size starting at *next.
static void push_groups(std::vector<std::vector<int>>& groups, int* next, int count, int size) {
    for (int g = 0; g < count; g++) {
        std::vector<int> grp(size);
        std::iota(grp.begin(), grp.end(), *next);
        *next += size;
        groups.push_back(std::move(grp));
    }
}

// Per-VN expected locality: min group size minus one over containing groups.
static std::map<int, int> profile_from_groups(int n, const std::vector<std::vector<int>>& groups) {
    std::vector<int> loc(n, -1);
    for (const auto& g : groups) {
        const int r = static_cast<int>(g.size()) - 1;
        for (int v : g)
            if (loc[v] < 0 || r < loc[v]) loc[v] = r;
    }
    std::map<int, int> profile;
    for (int v = 0; v < n; v++) {
        if (loc[v] < 0) throw Error("plan leaves VN " + std::to_string(v) + " uncovered");
        profile[loc[v]]++;
    }
    return profile;
}

static void require_group_size(int size) {
    if (size < 2)
        throw NotApplicable("layout would need a local group of fewer than 2 symbols");
}

ConstructionPlan plan_class1(int n, int k, int d) {
    CodeParams params{n, k, d};
    params.validate();
    const int J = params.J();
    const int c = static_cast<int>(ceil_div(k, J));
    const int f = k / J;
    if ((d - 2) % (c + 1) != 0)
        throw NotApplicable("class 1 needs (ceil(k/J)+1) | (d-2)");

    const int a = k + J - J * c;      // ceil-size groups among the first J
    const int floor_groups = J - a;   // floor-size groups
    const int tail_groups = (d - 2) / (c + 1);
    if (floor_groups > 0) require_group_size(f + 1);
    require_group_size(c + 1);

    ConstructionPlan plan;
    plan.class_id = 1;
    plan.params = params;
    int next = 0;
    push_groups(plan.local_groups, &next, floor_groups, f + 1);
    push_groups(plan.local_groups, &next, a, c + 1);
    push_groups(plan.local_groups, &next, tail_groups, c + 1);
    if (next != n) throw Error("class 1 groups do not partition n symbols");
    plan.global_checks = (n - k) - static_cast<int>(plan.local_groups.size());
    plan.expected_profile = profile_from_groups(n, plan.local_groups);
    validate_plan(plan);
    return plan;
}

ConstructionPlan plan_class2(int n, int k, int d) {
    CodeParams params{n, k, d};
    params.validate();
    const int J = params.J();
    const int c = static_cast<int>(ceil_div(k, J));
    const int f = k / J;
    if ((k - 1) % J != 0) throw NotApplicable("class 2 needs J | (k-1)");
    const int theta = (d - 2) % (c + 1);
    const int q = (d - 2) / (c + 1);
    if (q < c - theta)
        throw NotApplicable("class 2 needs floor((d-2)/(ceil(k/J)+1)) >= ceil(k/J) - theta");
    if (J - 1 > 0) require_group_size(f + 1);
    require_group_size(c + 1);

    ConstructionPlan plan;
    plan.class_id = 2;
    plan.params = params;
    int next = 0;
    push_groups(plan.local_groups, &next, J - 1, f + 1);

    if (theta == 0) {
        // The chain degenerates: everything is disjoint.
        push_groups(plan.local_groups, &next, q - c + (c + 1), c + 1);
    } else {
        push_groups(plan.local_groups, &next, q - (c - theta), c + 1);
        // Overlapping part: c+1-theta groups of size c+1, then one more group
        // made of theta fresh VNs plus the highest-indexed VN of each of them.
        const int overlap_first = static_cast<int>(plan.local_groups.size());
        push_groups(plan.local_groups, &next, c + 1 - theta, c + 1);
        std::vector<int> last(static_cast<size_t>(theta));
        std::iota(last.begin(), last.end(), next);
        next += theta;
        for (int g = overlap_first; g < static_cast<int>(plan.local_groups.size()); g++)
            last.push_back(plan.local_groups[g].back());
        std::sort(last.begin(), last.end());
        plan.local_groups.push_back(std::move(last));
    }
    if (next != n) throw Error("class 2 groups do not cover n symbols");
    plan.global_checks = (n - k) - static_cast<int>(plan.local_groups.size());
    plan.expected_profile = profile_from_groups(n, plan.local_groups);
    validate_plan(plan);
    return plan;
}

ConstructionPlan plan_class3(int n, int k, int d) {
    CodeParams params{n, k, d};
    params.validate();
    if (!rate_condition(n, k))
        throw NotApplicable("class 3 needs k/n > (1 - 1/sqrt(n))^2");

    const int J = params.J();
    TightBound tight = avg_locality_lb_tight(n, k, d);
    const int theta = tight.theta_star;
    const int m = n - theta;
    const int ceil_size = static_cast<int>(ceil_div(m, J));
    const int floor_size = m / J;
    const int a = tight.a_theta;
    require_group_size(floor_size);

    ConstructionPlan plan;
    plan.class_id = 3;
    plan.params = params;
    plan.theta_star = theta;
    plan.b_theta = theta == 0 ? 0 : 1;
    plan.r_last = n - J * (d - 2) - 1;

    int next = 0;
    push_groups(plan.local_groups, &next, J - a, floor_size);
    push_groups(plan.local_groups, &next, a, ceil_size);

    if (theta != 0) {
        // Overlap group: the highest-indexed VNs of each group (floor_size-d+2
        // resp. ceil_size-d+2 of them) plus all theta fresh VNs.
        std::vector<int> last;
        for (int g = 0; g < J; g++) {
            const auto& grp = plan.local_groups[g];
            const int take = static_cast<int>(grp.size()) - d + 2;
            if (take < 0) throw Error("class 3 step 4 would take a negative VN count");
            last.insert(last.end(), grp.end() - take, grp.end());
        }
        for (int t = 0; t < theta; t++) last.push_back(next + t);
        std::sort(last.begin(), last.end());
        if (static_cast<int>(last.size()) != plan.r_last + 1)
            throw Error("class 3 overlap group size disagrees with its locality");
        plan.local_groups.push_back(std::move(last));
        next += theta;
    }
    if (next != n) throw Error("class 3 groups do not cover n symbols");

    plan.global_checks = (n - k) - (J + plan.b_theta);
    plan.expected_profile = profile_from_groups(n, plan.local_groups);
    validate_plan(plan);
    return plan;
}

TannerGraph plan_to_tanner(const ConstructionPlan& plan) {
    TannerGraph graph;
    graph.n = plan.params.n;
    for (const auto& g : plan.local_groups) graph.checks.push_back({g, true});
    std::vector<int> all(plan.params.n);
    std::iota(all.begin(), all.end(), 0);
    for (int c = 0; c < plan.global_checks; c++) graph.checks.push_back({all, false});
    return graph;
}

void validate_plan(const ConstructionPlan& plan) {
    const CodeParams& p = plan.params;
    p.validate();
    if (plan.global_checks < 0) throw Error("plan has negative global check count");
    if (static_cast<int>(plan.local_groups.size()) + plan.global_checks != p.n - p.k)
        throw Error("plan check count does not equal n-k");

    std::vector<bool> covered(p.n, false);
    for (const auto& g : plan.local_groups) {
        if (g.size() < 2) throw Error("plan contains a local group with fewer than 2 VNs");
        for (int v : g) {
            if (v < 0 || v >= p.n) throw IndexOutOfRange("plan group index out of range");
            covered[v] = true;
        }
    }
    for (int v = 0; v < p.n; v++)
        if (!covered[v]) throw Error("plan leaves a VN outside every local group");

    CoverageResult cov = coverage_check(plan_to_tanner(plan), p.k, p.d);
    if (!cov.ok) throw Error("plan fails the J-subset coverage certificate");

    Rational target = plan.class_id == 3 ? avg_locality_lb_tight(p.n, p.k, p.d).bound
                                         : avg_locality_lb_general(p.n, p.k, p.d);
    if (plan.expected_avg() != target)
        throw Error("plan profile average " + plan.expected_avg().str() +
                    " does not meet the class bound " + target.str());
}

// Deterministic per-attempt stream; plain modulo keeps draws portable across
// standard libraries (uniform_int_distribution is not).
static std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (attempt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

static FieldElement random_nonzero(const FieldSpec& f, std::mt19937_64& rng) {
    return 1 + static_cast<FieldElement>(rng() % (f.order() - 1));
}

FieldMatrix random_parity_check(const TannerGraph& graph, const FieldSpec& field,
                                std::mt19937_64& rng) {
    FieldMatrix h(field, static_cast<int>(graph.checks.size()), graph.n);
    for (int r = 0; r < h.rows(); r++)
        for (int v : graph.checks[r].support) h.set(r, v, random_nonzero(field, rng));
    return h;
}

LinearCode realize_tanner(const TannerGraph& graph, CodeParams params,
                          const RealizationConfig& cfg) {
    params.validate();
    graph.validate();
    if (graph.n != params.n) throw ShapeMismatch("graph and params disagree on n");
    if (static_cast<int>(graph.checks.size()) != params.n - params.k)
        throw ShapeMismatch("graph must have exactly n-k checks");
    if (cfg.max_retries < 1) throw BadParams("max_retries must be >= 1");

    int rank_failures = 0, distance_failures = 0;
    for (int attempt = 0; attempt < cfg.max_retries; attempt++) {
        std::mt19937_64 rng(mix_seed(cfg.seed, attempt));
        FieldMatrix h = random_parity_check(graph, cfg.field, rng);
        if (rank(h) != params.n - params.k) {
            rank_failures++;
            continue;
        }
        if (!distance_at_least(h, params.d)) {
            distance_failures++;
            continue;
        }
        return LinearCode::from_parity_check(params, h);
    }
    throw RealizationFailed("no acceptable coefficients after " +
                            std::to_string(cfg.max_retries) + " attempts (" +
                            std::to_string(rank_failures) + " rank failures, " +
                            std::to_string(distance_failures) +
                            " distance failures); the field may be too small");
}

LinearCode realize(const ConstructionPlan& plan, const RealizationConfig& cfg) {
    validate_plan(plan);
    LinearCode code = realize_tanner(plan_to_tanner(plan), plan.params, cfg);

    LocalityProfile profile = locality_profile(code);
    std::map<int, int> got;
    for (int l : profile.loc) got[l]++;
    if (got != plan.expected_profile) {
        std::string msg = "locality oracle disagrees with the plan profile; got {";
        for (auto [l, c] : got) msg += std::to_string(l) + ":" + std::to_string(c) + " ";
        msg += "}";
        throw ProfileMismatch(msg);
    }
    return code;
}

const std::vector<std::vector<int>>& g0_transpose_rows() {
    // 16 coded symbols by 10 information symbols, entries are decimal bytes
    // over GF(256)/0x11D.
    static const std::vector<std::vector<int>> rows = {
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {35, 134, 39, 29, 15, 191, 187, 3, 102, 38},
        {34, 135, 39, 29, 15, 191, 187, 3, 102, 38},
        {234, 137, 29, 254, 245, 110, 153, 9, 223, 2},
        {243, 249, 60, 11, 59, 234, 48, 37, 217, 104},
        {25, 112, 32, 245, 206, 132, 169, 44, 6, 106},
        {0, 0, 0, 1, 1, 1, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    };
    return rows;
}

LinearCode embedded_g0() {
    const int n = 16, k = 10;
    const FieldSpec f = default_field();
    const auto& rows = g0_transpose_rows();

    FieldMatrix g(f, k, n);
    for (int v = 0; v < n; v++)
        for (int j = 0; j < k; j++) g.set(j, v, static_cast<FieldElement>(rows[v][j]));

    // Information symbols sit verbatim wherever G has a unit column; the
    // remaining positions carry parities and get the identity block of H.
    std::vector<int> unit_pos(k, -1);
    std::vector<bool> is_info(n, false);
    for (int v = 0; v < n; v++) {
        int ones = 0, where = -1;
        bool unit = true;
        for (int j = 0; j < k; j++) {
            if (g.at(j, v) == 1) { ones++; where = j; }
            else if (g.at(j, v) != 0) unit = false;
        }
        if (unit && ones == 1 && unit_pos[where] < 0) {
            unit_pos[where] = v;
            is_info[v] = true;
        }
    }
    std::vector<int> parity_pos;
    for (int v = 0; v < n; v++)
        if (!is_info[v]) parity_pos.push_back(v);
    if (parity_pos.size() != static_cast<size_t>(n - k))
        throw Error("embedded generator does not expose k information positions");

    FieldMatrix h(f, n - k, n);
    for (int t = 0; t < n - k; t++) {
        h.set(t, parity_pos[t], 1);
        for (int j = 0; j < k; j++) h.set(t, unit_pos[j], g.at(j, parity_pos[t]));
    }
    return LinearCode(CodeParams{n, k, 5}, g, h);
}

}  // namespace loclib
