#include "sidon/quadratic_window.hpp"

#include <cmath>
#include <optional>

#include "sidon/rational.hpp"

namespace sidon::bounds {

namespace {

Rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("coefficient must be finite");
    int exp = 0;
    const double frac = std::frexp(d, &exp);
    const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
    exp -= 53;
    Rational r(mant);
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}

BigInt floor_rational(const Rational& r) {
    BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
    if (r < 0 && Rational(q) != r) --q;
    return q;
}

std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::invalid_argument("quadratic window out of supported integer range");
    return static_cast<std::int64_t>(v);
}

enum class Sign { Negative, NonNegative, Unknown };

// Directed-rounding enclosure of kappa = sqrt(t) + t^(1/4) + 1/2 as integer
// multiples of 2^-frac_bits. Exact square roots collapse to point intervals.
struct KappaBounds {
    BigInt lo, hi;  // scale 2^frac_bits
    int frac_bits;
};

KappaBounds kappa_bounds(std::int64_t t, int frac_bits) {
    using boost::multiprecision::sqrt;
    const BigInt tt(t);
    const BigInt sq_arg = tt << (2 * frac_bits);
    BigInt sq_lo = sqrt(sq_arg);
    BigInt sq_hi = sq_lo * sq_lo == sq_arg ? sq_lo : sq_lo + 1;
    const BigInt q_arg = tt << (4 * frac_bits);
    const BigInt q_root = sqrt(q_arg);
    BigInt q_lo = sqrt(q_root);
    BigInt q4 = q_lo * q_lo;
    q4 *= q4;
    BigInt q_hi = q4 == q_arg ? q_lo : q_lo + 1;
    const BigInt half = BigInt(1) << (frac_bits - 1);
    return {sq_lo + q_lo + half, sq_hi + q_hi + half, frac_bits};
}

// f(m) = ell (m-1)(m+n-1) + kappa (m+n-1) - kappa^2 m, enclosed at scale
// 2^(2 frac_bits).
struct TranslatePoly {
    std::int64_t n, ell;
    KappaBounds k;

    Sign sign_at(const BigInt& m) const {
        const int f = k.frac_bits;
        const BigInt base = (BigInt(ell) * (m - 1) * (m + n - 1)) << (2 * f);
        const BigInt t1 = m + n - 1;
        const BigInt f_lo = base + ((t1 * k.lo) << f) - m * k.hi * k.hi;
        const BigInt f_hi = base + ((t1 * k.hi) << f) - m * k.lo * k.lo;
        if (f_hi < 0) return Sign::Negative;
        if (f_lo >= 0) return Sign::NonNegative;
        return Sign::Unknown;
    }

    // Enclosure of the vertex -a1 / (2 ell) as an integer range.
    std::pair<BigInt, BigInt> vertex_range() const {
        const int f = k.frac_bits;
        const BigInt c = BigInt(ell) * (n - 2) * (BigInt(1) << (2 * f));  // (n ell - 2 ell) scaled
        const BigInt a1_lo = c + (k.lo << f) - k.hi * k.hi;
        const BigInt a1_hi = c + (k.hi << f) - k.lo * k.lo;
        const BigInt den = BigInt(2 * ell) << (2 * f);
        BigInt v_lo = -a1_hi / den;
        while ((v_lo + 1) * den <= -a1_hi) ++v_lo;
        while (v_lo * den > -a1_hi) --v_lo;
        BigInt v_hi = -a1_lo / den;
        while (v_hi * den < -a1_lo) ++v_hi;
        return {v_lo, v_hi + 1};
    }
};

constexpr int kPrecisionLadder[] = {32, 64, 128, 256};

// Smallest m in [1, m0] with f(m) < 0, given f(m0) < 0 and f convex. Returns
// nullopt when a sign inside the search range is undecided at this precision.
std::optional<BigInt> lower_edge(const TranslatePoly& poly, BigInt m0) {
    BigInt lo = 1, hi = m0;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        switch (poly.sign_at(mid)) {
            case Sign::Negative: hi = mid; break;
            case Sign::NonNegative: lo = mid + 1; break;
            case Sign::Unknown: return std::nullopt;
        }
    }
    return lo;
}

void approx_translate_roots(std::int64_t n, std::int64_t ell, double* lo, double* hi) {
    const double t = static_cast<double>(ell) * static_cast<double>(n);
    const double kappa = std::sqrt(t) + std::sqrt(std::sqrt(t)) + 0.5;
    const double a2 = static_cast<double>(ell);
    const double a1 = static_cast<double>(n) * ell - kappa * kappa + kappa - 2.0 * ell;
    const double a0 = (kappa - ell) * (static_cast<double>(n) - 1.0);
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    const double root = disc > 0 ? std::sqrt(disc) : 0.0;
    *lo = (-a1 - root) / (2.0 * a2);
    *hi = (-a1 + root) / (2.0 * a2);
}

void check_translate_args(std::int64_t n, std::int64_t ell) {
    if (ell < 1 || n < ell) throw std::invalid_argument("requires n >= ell >= 1");
}

}  // namespace

NegativeWindowResult integer_in_negative_window(double a2, double a1, double a0) {
    if (!(a2 > 0) || !(a0 > 0) || !(a1 < 0))
        throw std::invalid_argument("requires a2 > 0, a0 > 0, a1 < 0");
    const Rational A2 = rational_from_double(a2);
    const Rational A1 = rational_from_double(a1);
    const Rational A0 = rational_from_double(a0);

    NegativeWindowResult res;
    const Rational disc = A1 * A1 - 4 * A2 * A0;
    res.has_real_roots = disc >= 0;
    if (disc > 0) {
        const double root = std::sqrt(a1 * a1 - 4 * a2 * a0);
        res.root_lo = (-a1 - root) / (2 * a2);
        res.root_hi = (-a1 + root) / (2 * a2);
    } else {
        res.root_lo = res.root_hi = -a1 / (2 * a2);
    }
    if (disc <= 0) return res;  // f >= 0 everywhere

    auto f = [&](const BigInt& m) {
        const Rational mm(m);
        return A2 * mm * mm + A1 * mm + A0;
    };
    const BigInt v_lo = floor_rational(-A1 / (2 * A2));
    BigInt m0 = -1;
    for (BigInt c : {v_lo, BigInt(v_lo + 1)}) {
        if (c < 1) c = 1;
        if (f(c) < 0) {
            m0 = c;
            break;
        }
    }
    if (m0 < 0) return res;  // no integer inside the open window

    BigInt lo = 1, hi = m0;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (f(mid) < 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    res.present = true;
    res.m = to_int64(lo);
    return res;
}

TranslateWindow feasible_translate_count(std::int64_t n, std::int64_t ell) {
    check_translate_args(n, ell);
    for (int frac_bits : kPrecisionLadder) {
        const TranslatePoly poly{n, ell, kappa_bounds(ell * n, frac_bits)};
        auto [v_lo, v_hi] = poly.vertex_range();
        if (v_lo < 1) v_lo = 1;
        if (v_hi < v_lo) v_hi = v_lo;
        if (v_hi - v_lo > 16) continue;  // enclosure too loose, escalate

        BigInt m0 = -1;
        bool undecided = false;
        for (BigInt c = v_lo; c <= v_hi; ++c) {
            const Sign s = poly.sign_at(c);
            if (s == Sign::Negative) {
                m0 = c;
                break;
            }
            if (s == Sign::Unknown) undecided = true;
        }
        if (m0 < 0) {
            if (undecided) continue;
            throw std::logic_error("translate window contains no integer");
        }
        const auto edge = lower_edge(poly, m0);
        if (!edge) continue;

        TranslateWindow out;
        out.m = to_int64(*edge);
        out.frac_bits = frac_bits;
        approx_translate_roots(n, ell, &out.root_lo, &out.root_hi);
        return out;
    }
    throw IndeterminateSign("sign of f(m) undecided at 256 fractional bits");
}

bool certify_translate_window(std::int64_t n, std::int64_t ell, std::int64_t m) {
    check_translate_args(n, ell);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    for (int frac_bits : kPrecisionLadder) {
        const TranslatePoly poly{n, ell, kappa_bounds(ell * n, frac_bits)};
        switch (poly.sign_at(BigInt(m))) {
            case Sign::Negative: return true;
            case Sign::NonNegative: return false;
            case Sign::Unknown: break;
        }
    }
    throw IndeterminateSign("sign of f(m) undecided at 256 fractional bits");
}

}  // namespace sidon::bounds
