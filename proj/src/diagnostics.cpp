#include "sidon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sidon::diag {

namespace {

std::int64_t interval_bound(const IntegerSet& a) {
    if (a.ambient().kind != AmbientKind::Interval)
        throw std::invalid_argument("operation requires an interval-ambient set");
    return a.ambient().bound;
}

// Count of elements of a inside [lo, hi].
std::int64_t mass(const std::vector<std::int64_t>& e, std::int64_t lo, std::int64_t hi) {
    auto l = std::lower_bound(e.begin(), e.end(), lo);
    auto r = std::upper_bound(e.begin(), e.end(), hi);
    return r - l;
}

long double fourth_root(std::int64_t n) {
    return std::sqrt(std::sqrt(static_cast<long double>(n)));
}

}  // namespace

DegreeProfile translate_degree_profile(const IntegerSet& a, std::int64_t m) {
    const std::int64_t n = interval_bound(a);
    if (m < 1) throw std::invalid_argument("translate count must be >= 1");
    DegreeProfile p;
    p.n = n;
    p.m = m;
    p.k = a.size();
    // prefix[i] = |A ∩ [1, i]|
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t e : a.elements()) prefix[static_cast<std::size_t>(e)] = 1;
    for (std::size_t i = 1; i < prefix.size(); ++i) prefix[i] += prefix[i - 1];
    p.degrees.resize(static_cast<std::size_t>(p.v()));
    for (std::int64_t x = 1; x <= p.v(); ++x) {
        const std::int64_t hi = std::min(x, n);
        const std::int64_t lo = std::max<std::int64_t>(x - m, 0);
        p.degrees[static_cast<std::size_t>(x - 1)] =
            static_cast<std::int32_t>(prefix[static_cast<std::size_t>(hi)] -
                                      prefix[static_cast<std::size_t>(lo)]);
    }
    return p;
}

Rational defect(const DegreeProfile& profile) {
    const std::int64_t v = profile.v();
    if (v < 1) throw std::invalid_argument("empty profile");
    BigInt sum = 0, sum_sq = 0;
    std::map<std::int32_t, std::int64_t> hist;
    for (std::int32_t d : profile.degrees) {
        sum += d;
        sum_sq += BigInt(d) * d;
        ++hist[d];
    }
    if (sum != BigInt(profile.k) * profile.m)
        throw std::logic_error("degree mass does not match k*m");
    const Rational k_direct(v * sum_sq - sum * sum, BigInt(v));

    // Independent recomputation from the centered form.
    BigInt centered = 0;
    for (const auto& [d, cnt] : hist) {
        const BigInt dev = sum - BigInt(v) * d;
        centered += BigInt(cnt) * dev * dev;
    }
    if (Rational(centered, BigInt(v) * v) != k_direct)
        throw std::logic_error("defect identity violated");
    return k_direct;
}

Rational window_variance_bound(const DegreeProfile& profile,
                               const std::vector<std::int64_t>& window) {
    if (window.empty()) throw std::invalid_argument("window must be nonempty");
    const std::int64_t v = profile.v();
    std::vector<std::int64_t> w = window;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw std::invalid_argument("window positions must be distinct");
    if (w.front() < 1 || w.back() > v)
        throw std::invalid_argument("window position out of range");

    BigInt total = 0;
    for (std::int32_t d : profile.degrees) total += d;
    BigInt in_window = 0;
    for (std::int64_t x : w) in_window += profile.degrees[static_cast<std::size_t>(x - 1)];

    // |X| (dbar - d_X)^2 = (total |X| - in_window v)^2 / (v^2 |X|)
    const BigInt xs(static_cast<std::int64_t>(w.size()));
    const BigInt num = total * xs - in_window * v;
    const Rational bound(num * num, BigInt(v) * v * xs);
    if (bound > defect(profile))
        throw std::logic_error("window bound exceeds the defect");
    return bound;
}

IntersectionAudit translate_intersection_audit(const IntegerSet& a, std::int64_t m) {
    if (a.ambient().kind == AmbientKind::Cyclic)
        throw std::invalid_argument("translate audit requires an interval or unbounded set");
    if (m < 2) throw std::invalid_argument("translate count must be >= 2");
    IntersectionAudit audit;
    if (a.size() < 2) return audit;
    // |A_i ∩ A_j| equals the multiplicity of the difference j - i.
    for (const auto& [d, cnt] : difference_histogram(a).entries) {
        if (d > m - 1) break;
        audit.max_pair_intersection = std::max(audit.max_pair_intersection, cnt);
        if (cnt == 2) audit.pairs_with_size_2 += m - d;
    }
    return audit;
}

std::int64_t order_limited_difference_sum(const IntegerSet& a, std::int64_t ell) {
    std::int64_t sum = 0;
    for (const auto& od : order_differences(a, ell)) sum += od.value;
    return sum;
}

DifferenceChain verify_difference_chain(const IntegerSet& a, std::int64_t ell) {
    if (!is_sidon(a)) throw std::invalid_argument("set is not Sidon");
    const std::int64_t k = a.size();
    const std::int64_t n =
        a.ambient().kind == AmbientKind::Interval ? a.ambient().bound : a.max_element();
    DifferenceChain c;
    c.sum = order_limited_difference_sum(a, ell);  // validates ell
    const std::int64_t t = ell * k - ell * (ell + 1) / 2;
    c.lhs = Rational(BigInt(t) * t, 2);
    c.baseline = t * (t + 1) / 2;
    c.rhs = ell * (ell + 1) / 2 * n;
    c.holds = c.lhs < Rational(c.baseline) && c.baseline <= c.sum && c.sum < c.rhs;
    return c;
}

std::int64_t slack(const IntegerSet& a, std::int64_t ell) {
    if (!is_sidon(a)) throw std::invalid_argument("set is not Sidon");
    const std::int64_t k = a.size();
    const std::int64_t sum = order_limited_difference_sum(a, ell);
    const std::int64_t t = ell * k - ell * (ell + 1) / 2;
    const std::int64_t c = sum - t * (t + 1) / 2;
    if (c < 0) throw std::logic_error("negative slack on a Sidon set");
    return c;
}

WeakSlack weak_slack(const IntegerSet& a, std::int64_t ell) {
    if (!is_weak_sidon(a)) throw std::invalid_argument("set is not weak Sidon");
    const std::int64_t cap = (ell - 1) * a.size();
    WeakSlack w;
    for (const auto& od : order_differences(a, ell))
        w.value += std::max<std::int64_t>(od.value - cap, 0);
    w.repeated_distance_count =
        static_cast<std::int64_t>(repeated_distances(a).counts.size());
    return w;
}

DiscrepancyStats discrepancy_stats(const IntegerSet& a, std::int64_t s, std::int64_t m) {
    const std::int64_t n = interval_bound(a);
    if (s < 1 || s > m - s) throw std::invalid_argument("requires 1 <= s <= m - s");
    if (m > n) throw std::invalid_argument("requires m <= n");
    const auto& e = a.elements();
    DiscrepancyStats st;
    st.s = s;
    st.m = m;
    st.r1 = mass(e, 1, s);
    st.r2 = mass(e, n - s + 1, n);
    st.R1 = mass(e, 1, m - s);
    st.R2 = mass(e, n - (m - s) + 1, n);
    return st;
}

std::string case_kind_name(CaseKind kind) {
    switch (kind) {
        case CaseKind::LowEdgeMass: return "low-edge-mass";
        case CaseKind::HighEdgeMass: return "high-edge-mass";
        case CaseKind::MiddleGap: return "middle-gap";
    }
    return "?";
}

CaseReport case_report(const IntegerSet& a, double alpha, double beta, double eps) {
    const std::int64_t n = interval_bound(a);
    if (!(alpha > 0) || !(alpha < 1) || !(beta > 0) || !(2 * beta < alpha) || !(eps > 0) ||
        !(eps < 1))
        throw std::invalid_argument("requires 0 < 2 beta < alpha < 1 and 0 < eps < 1");
    if (!is_sidon(a)) throw std::invalid_argument("set is not Sidon");

    CaseReport rep;
    rep.n = n;
    rep.k = a.size();
    const long double q = fourth_root(n);
    const long double q3 = q * q * q;  // n^(3/4)
    // the nudge keeps floors of decimal parameters exact, e.g. 0.037 * 1000
    rep.m = static_cast<std::int64_t>(q3 + 1e-9L);
    rep.s = static_cast<std::int64_t>(beta * q3 + 1e-9L);
    rep.L = static_cast<std::int64_t>((1.0L - alpha) * q + 1e-9L);
    if (rep.s < 1 || rep.L < 1 || rep.L >= rep.k)
        throw std::invalid_argument("input below diagnostic scale");

    rep.stats = discrepancy_stats(a, rep.s, rep.m);
    const double edge_low = 2.0 * (1.0 - eps) * static_cast<double>(q);
    const double edge_high = 2.0 * (1.0 + eps) * static_cast<double>(q);
    if (static_cast<double>(rep.stats.r()) <= edge_low)
        rep.kind = CaseKind::LowEdgeMass;
    else if (static_cast<double>(rep.stats.R()) >= edge_high)
        rep.kind = CaseKind::HighEdgeMass;
    else
        rep.kind = CaseKind::MiddleGap;

    const DegreeProfile profile = translate_degree_profile(a, rep.m);
    rep.K_exact = defect(profile);
    rep.C_exact = slack(a, rep.L);

    const double n54 = static_cast<double>(n) * static_cast<double>(q);  // n^(5/4)
    if (rep.kind == CaseKind::MiddleGap) {
        const double c = 1.0 - alpha - 2.0 * eps;
        rep.claim_reference_gain = c * c * (alpha - 2.0 * beta) * n54;
    } else {
        rep.claim_reference_gain = 2.0 * eps * eps * beta * n54;
    }

    if (rep.kind != CaseKind::MiddleGap) {
        const std::int64_t v = profile.v();
        rep.window.reserve(static_cast<std::size_t>(2 * rep.s));
        if (rep.kind == CaseKind::LowEdgeMass) {
            for (std::int64_t x = 1; x <= rep.s; ++x) rep.window.push_back(x);
            for (std::int64_t x = v - rep.s + 1; x <= v; ++x) rep.window.push_back(x);
        } else {
            for (std::int64_t x = rep.m - rep.s + 1; x <= rep.m; ++x) rep.window.push_back(x);
            for (std::int64_t x = n; x <= n + rep.s - 1; ++x) rep.window.push_back(x);
        }
        rep.window_bound = window_variance_bound(profile, rep.window);
        rep.has_window_bound = true;
        if (rep.window_bound > rep.K_exact)
            throw std::logic_error("window bound exceeds exact defect");
    }
    return rep;
}

double refined_bound_from_slack(std::int64_t n, double alpha, double slack_value) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(alpha >= 0) || !(alpha < 1)) throw std::invalid_argument("requires 0 <= alpha < 1");
    if (!(slack_value >= 0)) throw std::invalid_argument("slack must be >= 0");
    const double rq = std::sqrt(std::sqrt(static_cast<double>(n)));
    const double correction =
        (2.0 * slack_value / static_cast<double>(n) - rq * alpha * alpha * (1.0 - alpha)) /
        (2.0 * (1.0 - alpha) * (1.0 - alpha));
    return std::sqrt(static_cast<double>(n)) + rq - correction + 0.5;
}

DefectBound refined_bound_from_defect(std::int64_t n, double defect_value) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(defect_value >= 0)) throw std::invalid_argument("defect must be >= 0");
    const double dn = static_cast<double>(n);
    DefectBound b;
    b.value = std::sqrt(dn) + std::sqrt(std::sqrt(dn)) - defect_value / (2.0 * dn) + 2.0;
    b.large_defect = defect_value >= 2.0 * dn * std::sqrt(dn);
    return b;
}

}  // namespace sidon::diag
