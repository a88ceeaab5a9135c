#include "sidon/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace sidon::bounds {

BoundKind bound_kind_from_string(const std::string& name) {
    if (name == "trivial") return BoundKind::Trivial;
    if (name == "lindstrom") return BoundKind::Lindstrom;
    if (name == "cilleruelo") return BoundKind::Cilleruelo;
    if (name == "main") return BoundKind::MainTheorem;
    if (name == "kayll") return BoundKind::KayllWeak;
    if (name == "thin") return BoundKind::Thin;
    throw std::invalid_argument("unknown bound kind '" + name + "'");
}

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::Trivial: return "trivial";
        case BoundKind::Lindstrom: return "lindstrom";
        case BoundKind::Cilleruelo: return "cilleruelo";
        case BoundKind::MainTheorem: return "main";
        case BoundKind::KayllWeak: return "kayll";
        case BoundKind::Thin: return "thin";
    }
    return "?";
}

BoundReport closed_form_bound(BoundKind kind, std::int64_t n, std::int64_t ell, double gamma) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BoundReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.ell = 1;
    const double dn = static_cast<double>(n);
    switch (kind) {
        case BoundKind::Trivial:
            rep.value = 2.0 * std::sqrt(dn);
            break;
        case BoundKind::Lindstrom:
            rep.value = std::sqrt(dn) + std::sqrt(std::sqrt(dn)) + 1.0;
            break;
        case BoundKind::Cilleruelo:
            rep.value = std::sqrt(dn) + std::sqrt(std::sqrt(dn)) + 0.5;
            break;
        case BoundKind::MainTheorem:
            if (!(gamma > 0) || !(gamma < 1))
                throw std::invalid_argument("gamma must lie in (0, 1)");
            rep.gamma = gamma;
            rep.value = std::sqrt(dn) + std::sqrt(std::sqrt(dn)) * (1.0 - gamma);
            rep.flag = "asymptotic: valid for sufficiently large n only";
            break;
        case BoundKind::KayllWeak:
            rep.value = std::sqrt(dn) + std::sqrt(3.0) * std::sqrt(std::sqrt(dn));
            rep.flag = "additive O(1) term suppressed";
            break;
        case BoundKind::Thin: {
            if (ell < 1) throw std::invalid_argument("ell must be >= 1");
            rep.ell = ell;
            const double t = static_cast<double>(ell) * dn;
            rep.value = std::sqrt(t) + std::sqrt(std::sqrt(t)) + 0.5;
            break;
        }
    }
    rep.implied_max = static_cast<std::int64_t>(std::ceil(rep.value)) - 1;
    return rep;
}

Rational johnson_min_ground(std::int64_t k, std::int64_t m, std::int64_t t) {
    if (k < 1 || m < 1) throw std::invalid_argument("requires k >= 1 and m >= 1");
    if (t < 0 || t > k) throw std::invalid_argument("requires 0 <= t <= k");
    return Rational(BigInt(k) * k * m, BigInt(t) * m + k - t);
}

FeasibilityReport parameter_feasibility(FeasibilityMode mode, double alpha, double beta,
                                        double eps, double gamma) {
    if (!(beta > 0) || !(2 * beta < alpha) || !(alpha < 1))
        throw std::invalid_argument("requires 0 < 2 beta < alpha < 1");
    if (!(eps > 0) || !(eps < 1)) throw std::invalid_argument("requires 0 < eps < 1");
    if (!(gamma > 0)) throw std::invalid_argument("requires gamma > 0");

    double lhs_min = 0;
    if (mode == FeasibilityMode::Sidon) {
        const double first = eps * eps * beta;
        const double c = 1.0 - alpha - 2.0 * eps;
        const double second = (2.0 * c * c * (alpha - 2.0 * beta) -
                               alpha * alpha * (1.0 - alpha)) /
                              (2.0 * (1.0 - alpha) * (1.0 - alpha));
        lhs_min = std::min(first, second);
    } else {
        const double r3 = std::sqrt(3.0);
        const double first = beta * eps * eps;
        const double c = r3 - alpha - 2.0 * eps;
        const double second = c * c * (alpha - 2.0 * beta) / ((r3 - alpha) * (r3 - alpha)) -
                              alpha * alpha / (2.0 * (r3 - alpha));
        lhs_min = std::min(first, second);
    }

    FeasibilityReport rep;
    rep.lhs_min = lhs_min;
    rep.margin = lhs_min - gamma;
    rep.feasible = lhs_min > gamma;
    return rep;
}

}  // namespace sidon::bounds
