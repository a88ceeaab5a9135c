#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace sidon::gf {

bool is_prime(std::int64_t n);
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

// Element x + theta*y of GF(p^2), tagged with its characteristic so that
// operands from different fields are rejected.
struct FieldElement {
    std::int64_t p = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const FieldElement&) const = default;
    std::string to_string() const;  // "(x,y)"
};

// GF(p^2) as a quadratic extension of GF(p). For odd p the reduction is
// theta^2 = s with s the smallest quadratic non-residue mod p; for p = 2 it
// is theta^2 = theta + 1.
class ExtField {
  public:
    explicit ExtField(std::int64_t p);  // rejects non-primes

    std::int64_t p() const { return p_; }
    std::int64_t order() const { return p_ * p_; }  // number of field elements
    std::int64_t unit_group_order() const { return p_ * p_ - 1; }
    std::int64_t nonresidue() const { return cst_; }  // s for odd p, 1 for p = 2
    std::string reduction_string() const;

    FieldElement zero() const { return {p_, 0, 0}; }
    FieldElement one() const { return {p_, 1, 0}; }
    FieldElement theta() const { return {p_, 0, 1}; }
    FieldElement make(std::int64_t x, std::int64_t y) const;
    FieldElement from_base(std::int64_t x) const { return make(x, 0); }

    bool is_zero(const FieldElement& a) const;
    // True when a lies in the base subfield GF(p).
    bool in_base(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    // pow(0, 0) returns 1 by convention.
    FieldElement pow(const FieldElement& a, std::int64_t e) const;

    std::int64_t element_order(const FieldElement& a) const;  // rejects zero

  private:
    void check(const FieldElement& a) const;

    std::int64_t p_;
    // theta^2 = lin_*theta + cst_
    std::int64_t lin_;
    std::int64_t cst_;
};

// Smallest primitive element of GF(p^2) in lexicographic (x, y) order, with
// the order test done against the distinct prime factors of p^2 - 1.
FieldElement find_primitive(const ExtField& field);

// Discrete logarithms base g over the whole unit group, built by iterated
// multiplication. log(identity) = p^2 - 1; exponents run over [1, p^2 - 1].
class DiscreteLogTable {
  public:
    DiscreteLogTable(const ExtField& field, const FieldElement& g);  // rejects non-primitive g

    std::int64_t log(const FieldElement& a) const;  // rejects zero
    std::int64_t size() const { return static_cast<std::int64_t>(table_.size()); }
    const FieldElement& generator() const { return g_; }

  private:
    std::int64_t p_;
    FieldElement g_;
    std::unordered_map<std::int64_t, std::int64_t> table_;  // x*p + y -> exponent
};

}  // namespace sidon::gf
