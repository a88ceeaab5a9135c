#pragma once

#include <cstdint>
#include <string>

#include "sidon/rational.hpp"

namespace sidon::bounds {

enum class BoundKind { Trivial, Lindstrom, Cilleruelo, MainTheorem, KayllWeak, Thin };

BoundKind bound_kind_from_string(const std::string& name);
std::string bound_kind_name(BoundKind kind);

struct BoundReport {
    BoundKind kind = BoundKind::Trivial;
    std::int64_t n = 0;
    std::int64_t ell = 1;      // Thin only
    double gamma = 0.0;        // MainTheorem only
    double value = 0.0;
    std::int64_t implied_max = 0;  // ceil(value) - 1
    std::string flag;              // validity caveat, empty when none
};

// Upper bounds on the size of a Sidon-type subset of [n]:
//   trivial      2 sqrt(n)
//   lindstrom    sqrt(n) + n^(1/4) + 1
//   cilleruelo   sqrt(n) + n^(1/4) + 1/2
//   main         sqrt(n) + n^(1/4) (1 - gamma)       (asymptotic)
//   kayll        sqrt(n) + sqrt(3) n^(1/4)           (weak Sidon, O(1) suppressed)
//   thin         sqrt(ell n) + (ell n)^(1/4) + 1/2   (ell-thin)
// Fourth roots are evaluated as sqrt(sqrt(n)) so exact cases stay exact.
BoundReport closed_form_bound(BoundKind kind, std::int64_t n, std::int64_t ell = 1,
                              double gamma = 0.002);

// Minimum ground-set size carrying m k-subsets with pairwise intersections
// at most t: k^2 m / (t m + k - t), exact. Requires k >= 1, m >= 1,
// 0 <= t <= k.
Rational johnson_min_ground(std::int64_t k, std::int64_t m, std::int64_t t);

enum class FeasibilityMode { Sidon, Weak };

struct FeasibilityReport {
    bool feasible = false;
    double lhs_min = 0.0;
    double margin = 0.0;  // lhs_min - gamma
};

// Feasibility of the density-increment parameters. Requires
// 0 < 2 beta < alpha < 1, 0 < eps < 1, gamma > 0.
//   Sidon: min{ eps^2 beta,
//               (2 (1-alpha-2 eps)^2 (alpha-2 beta) - alpha^2 (1-alpha))
//                 / (2 (1-alpha)^2) } > gamma
//   Weak:  min{ beta eps^2,
//               (sqrt(3)-alpha-2 eps)^2 (alpha-2 beta) / (sqrt(3)-alpha)^2
//                 - alpha^2 / (2 (sqrt(3)-alpha)) } > gamma
FeasibilityReport parameter_feasibility(FeasibilityMode mode, double alpha, double beta,
                                        double eps, double gamma);

}  // namespace sidon::bounds
