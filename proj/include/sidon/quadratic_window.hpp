#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sidon::bounds {

// Interval evaluation could not decide a strict sign at the precision cap.
class IndeterminateSign : public std::runtime_error {
  public:
    explicit IndeterminateSign(const std::string& msg) : std::runtime_error(msg) {}
};

struct NegativeWindowResult {
    bool present = false;
    std::int64_t m = 0;  // smallest integer with f(m) < 0, when present
    bool has_real_roots = false;
    double root_lo = 0;  // double approximations, for reporting only
    double root_hi = 0;
};

// Smallest positive integer m with f(m) < 0 for f(x) = a2 x^2 + a1 x + a0.
// Doubles are dyadic, so membership is decided in exact rational arithmetic.
// Requires a2 > 0, a0 > 0, a1 < 0 (the configuration with two positive roots
// when the discriminant is positive).
NegativeWindowResult integer_in_negative_window(double a2, double a1, double a0);

struct TranslateWindow {
    std::int64_t m = 0;  // smallest certified integer in the open window
    double root_lo = 0;  // approximate window endpoints, for reporting only
    double root_hi = 0;
    int frac_bits = 0;  // fractional bits at which the certificate closed
};

// Smallest m >= 1 with f(m) < 0 where
//   f(x) = ell x^2 + (n ell - kappa^2 + kappa - 2 ell) x + (kappa - ell)(n - 1)
//   kappa = sqrt(ell n) + (ell n)^(1/4) + 1/2.
// kappa is enclosed by directed rounding at 32 fractional bits, doubling up
// to 256; an undecidable sign at the cap raises IndeterminateSign.
// Requires n >= ell >= 1.
TranslateWindow feasible_translate_count(std::int64_t n, std::int64_t ell);

// Certified check that the same f satisfies f(m) < 0 (true) or f(m) >= 0
// (false). Throws IndeterminateSign if undecided at the cap.
bool certify_translate_window(std::int64_t n, std::int64_t ell, std::int64_t m);

}  // namespace sidon::bounds
