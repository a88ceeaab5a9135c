#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidon/integer_set.hpp"
#include "sidon/rational.hpp"

namespace sidon::diag {

// Degrees of the translate family A, A+1, ..., A+(m-1) over [1, n+m-1]:
// degrees[x-1] counts the translates containing position x.
struct DegreeProfile {
    std::int64_t n = 0;  // interval bound of the base set
    std::int64_t m = 0;  // number of translates
    std::int64_t k = 0;  // |A|
    std::vector<std::int32_t> degrees;

    std::int64_t v() const { return n + m - 1; }
};

// Requires an interval-ambient base set and m >= 1.
DegreeProfile translate_degree_profile(const IntegerSet& a, std::int64_t m);

// K = sum d_x^2 - (sum d_x)^2 / v, exact. The centered form
// sum (dbar - d_x)^2 is recomputed independently and must agree.
Rational defect(const DegreeProfile& profile);

// |X| (dbar - d_X)^2 for a window X of positions, a lower bound for the
// defect. Window positions must be distinct and inside [1, v].
Rational window_variance_bound(const DegreeProfile& profile,
                               const std::vector<std::int64_t>& window);

struct IntersectionAudit {
    std::int64_t max_pair_intersection = 0;  // max |A_i ∩ A_j| over i < j
    std::int64_t pairs_with_size_2 = 0;  // translate pairs meeting in exactly 2 points
};

// Exact pairwise intersection sizes of the m translates. Requires m >= 2 and
// an interval or unbounded base set.
IntersectionAudit translate_intersection_audit(const IntegerSet& a, std::int64_t m);

// sum of a_j - a_i over i < j <= i + ell. Requires 1 <= ell <= |A| - 1.
std::int64_t order_limited_difference_sum(const IntegerSet& a, std::int64_t ell);

// The two-sided enclosure of the order-limited difference sum of a Sidon set,
// with T = ell k - ell (ell + 1) / 2:
//   ell^2 (k - (ell+1)/2)^2 / 2  <  T(T+1)/2  <=  sum  <  ell (ell+1) n / 2.
struct DifferenceChain {
    Rational lhs;
    std::int64_t baseline = 0;
    std::int64_t sum = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

DifferenceChain verify_difference_chain(const IntegerSet& a, std::int64_t ell);

// sum - T(T+1)/2, the excess of the order-limited difference sum over the
// smallest value distinct positive differences allow. Requires A Sidon.
std::int64_t slack(const IntegerSet& a, std::int64_t ell);

struct WeakSlack {
    std::int64_t value = 0;
    std::int64_t repeated_distance_count = 0;  // distinct distances used twice
};

// sum of max{a_j - a_i - (ell-1) k, 0} over i < j <= i + ell. Requires A
// weak Sidon.
WeakSlack weak_slack(const IntegerSet& a, std::int64_t ell);

struct DiscrepancyStats {
    std::int64_t s = 0, m = 0;
    std::int64_t r1 = 0, r2 = 0;  // mass in [1, s] and [n-s+1, n]
    std::int64_t R1 = 0, R2 = 0;  // mass in [1, m-s] and [n-(m-s)+1, n]

    std::int64_t r() const { return r1 + r2; }
    std::int64_t R() const { return R1 + R2; }
};

// Requires interval ambient, 1 <= s <= m - s, m <= n.
DiscrepancyStats discrepancy_stats(const IntegerSet& a, std::int64_t s, std::int64_t m);

enum class CaseKind { LowEdgeMass, HighEdgeMass, MiddleGap };

std::string case_kind_name(CaseKind kind);

struct CaseReport {
    CaseKind kind = CaseKind::MiddleGap;
    std::int64_t n = 0, k = 0;
    std::int64_t s = 0, m = 0, L = 0;
    DiscrepancyStats stats;
    Rational K_exact;           // defect of the m-translate profile
    std::int64_t C_exact = 0;   // slack at order L
    double claim_reference_gain = 0;
    bool has_window_bound = false;
    std::vector<std::int64_t> window;
    Rational window_bound;
};

// Case assignment for a Sidon set A in [n] at parameters (alpha, beta, eps):
// s = floor(beta n^(3/4)), m = floor(n^(3/4)), L = floor((1-alpha) n^(1/4)),
//   LowEdgeMass   if r <= 2 (1-eps) n^(1/4)
//   HighEdgeMass  else if R >= 2 (1+eps) n^(1/4)
//   MiddleGap     otherwise.
// Rejects inputs below diagnostic scale (s < 1, L < 1, or L >= |A|).
CaseReport case_report(const IntegerSet& a, double alpha, double beta, double eps);

// sqrt(n) + n^(1/4) - ((2C/n) - n^(1/4) alpha^2 (1-alpha)) / (2 (1-alpha)^2) + 1/2
double refined_bound_from_slack(std::int64_t n, double alpha, double slack_value);

struct DefectBound {
    double value = 0;
    bool large_defect = false;  // K >= 2 n^(3/2): the profile already forces
                                // a window argument rather than this bound
};

// sqrt(n) + n^(1/4) - K/(2n) + 2
DefectBound refined_bound_from_defect(std::int64_t n, double defect_value);

}  // namespace sidon::diag
