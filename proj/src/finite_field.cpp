#include "sidon/finite_field.hpp"

#include <stdexcept>

namespace sidon::gf {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorization requires a positive integer");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string FieldElement::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

namespace {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::int64_t smallest_nonresidue(std::int64_t p) {
    for (std::int64_t s = 2; s < p; ++s)
        if (mod_pow(s, (p - 1) / 2, p) == p - 1) return s;
    throw std::logic_error("no quadratic non-residue found");
}

}  // namespace

ExtField::ExtField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (p == 2) {
        lin_ = 1;
        cst_ = 1;
    } else {
        lin_ = 0;
        cst_ = smallest_nonresidue(p);
    }
}

std::string ExtField::reduction_string() const {
    if (p_ == 2) return "theta^2 = theta + 1";
    return "theta^2 = " + std::to_string(cst_);
}

FieldElement ExtField::make(std::int64_t x, std::int64_t y) const {
    if (x < 0 || x >= p_ || y < 0 || y >= p_)
        throw std::invalid_argument("field element coordinates out of range");
    return {p_, x, y};
}

void ExtField::check(const FieldElement& a) const {
    if (a.p != p_) throw std::invalid_argument("field element belongs to a different field");
}

bool ExtField::is_zero(const FieldElement& a) const {
    check(a);
    return a.x == 0 && a.y == 0;
}

bool ExtField::in_base(const FieldElement& a) const {
    check(a);
    return a.y == 0;
}

FieldElement ExtField::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    return {p_, (a.x + b.x) % p_, (a.y + b.y) % p_};
}

FieldElement ExtField::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    return {p_, (a.x - b.x + p_) % p_, (a.y - b.y + p_) % p_};
}

FieldElement ExtField::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    const std::int64_t yy = a.y * b.y % p_;
    const std::int64_t x = (a.x * b.x + cst_ * yy) % p_;
    const std::int64_t y = (a.x * b.y + a.y * b.x + lin_ * yy) % p_;
    return {p_, x, y};
}

FieldElement ExtField::pow(const FieldElement& a, std::int64_t e) const {
    check(a);
    if (e < 0) throw std::invalid_argument("negative exponent");
    FieldElement r = one();
    FieldElement b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::int64_t ExtField::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw std::invalid_argument("zero has no multiplicative order");
    std::int64_t ord = unit_group_order();
    for (std::int64_t q : distinct_prime_factors(unit_group_order()))
        while (ord % q == 0 && pow(a, ord / q) == one()) ord /= q;
    return ord;
}

FieldElement find_primitive(const ExtField& field) {
    const std::int64_t n = field.unit_group_order();
    const auto factors = distinct_prime_factors(n);
    for (std::int64_t x = 0; x < field.p(); ++x) {
        for (std::int64_t y = 0; y < field.p(); ++y) {
            if (x == 0 && y == 0) continue;
            const FieldElement g = field.make(x, y);
            bool primitive = true;
            for (std::int64_t q : factors) {
                if (field.pow(g, n / q) == field.one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return g;
        }
    }
    throw std::logic_error("no primitive element found");
}

DiscreteLogTable::DiscreteLogTable(const ExtField& field, const FieldElement& g)
    : p_(field.p()), g_(g) {
    const std::int64_t n = field.unit_group_order();
    table_.reserve(static_cast<std::size_t>(n));
    FieldElement cur = field.one();
    for (std::int64_t e = 1; e <= n; ++e) {
        cur = field.mul(cur, g);
        if (cur == field.one() && e < n)
            throw std::invalid_argument("generator is not primitive (cycle closed early)");
        table_.emplace(cur.x * p_ + cur.y, e);
    }
}

std::int64_t DiscreteLogTable::log(const FieldElement& a) const {
    if (a.p != p_) throw std::invalid_argument("field element belongs to a different field");
    auto it = table_.find(a.x * p_ + a.y);
    if (it == table_.end()) throw std::invalid_argument("discrete log of zero is undefined");
    return it->second;
}

}  // namespace sidon::gf
