#include "sidon/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sidon::gen {

ConstructionRecord powers_of_two(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("interval bound must be >= 1");
    std::vector<std::int64_t> elems;
    for (std::int64_t v = 1; v <= n; v *= 2) {
        elems.push_back(v);
        if (v > n / 2) break;
    }
    ConstructionRecord rec;
    rec.set = IntegerSet(std::move(elems), Ambient::interval(n));
    rec.method = "powers2";
    rec.n = n;
    rec.verified = is_sidon(rec.set);
    return rec;
}

ConstructionRecord greedy_sidon(std::int64_t n, const IntegerSet& seed) {
    if (n < 1) throw std::invalid_argument("interval bound must be >= 1");
    if (!seed.empty() && seed.max_element() > n)
        throw std::invalid_argument("seed does not fit in [n]");
    if (!is_sidon(seed)) throw std::invalid_argument("seed is not a Sidon set");

    std::vector<std::int64_t> a = seed.elements();
    std::vector<bool> in_set(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> diff_used(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> sum_used(2 * static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        in_set[static_cast<std::size_t>(a[i])] = true;
        for (std::size_t j = 0; j <= i; ++j) {
            diff_used[static_cast<std::size_t>(a[i] - a[j])] = true;
            sum_used[static_cast<std::size_t>(a[i] + a[j])] = true;
        }
    }

    // Admissibility of x given A only shrinks as A grows, so one increasing
    // pass adjoins exactly the smallest admissible element each round.
    for (std::int64_t x = 1; x <= n; ++x) {
        if (in_set[static_cast<std::size_t>(x)]) continue;
        if (sum_used[static_cast<std::size_t>(2 * x)]) continue;  // x - a = b - x repeat
        bool ok = true;
        for (std::int64_t v : a) {
            if (diff_used[static_cast<std::size_t>(std::abs(x - v))]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::int64_t v : a) {
            diff_used[static_cast<std::size_t>(std::abs(x - v))] = true;
            sum_used[static_cast<std::size_t>(x + v)] = true;
        }
        sum_used[static_cast<std::size_t>(2 * x)] = true;
        in_set[static_cast<std::size_t>(x)] = true;
        a.push_back(x);
    }
    std::sort(a.begin(), a.end());

    ConstructionRecord rec;
    rec.set = IntegerSet(std::move(a), Ambient::interval(n));
    rec.method = "greedy";
    rec.n = n;
    rec.verified = is_sidon(rec.set);
    return rec;
}

namespace {

// Membership flags over exponents [1, p^2-1]: bit a set iff g^a - g is in
// the base field.
std::vector<bool> base_hit_exponents(const gf::ExtField& field, const gf::FieldElement& g) {
    const std::int64_t n = field.unit_group_order();
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    gf::FieldElement cur = field.one();
    for (std::int64_t a = 1; a <= n; ++a) {
        cur = field.mul(cur, g);
        if (field.in_base(field.sub(cur, g))) hit[static_cast<std::size_t>(a)] = true;
    }
    return hit;
}

}  // namespace

ConstructionRecord bose_chowla(std::int64_t p) {
    const gf::ExtField field(p);
    const gf::FieldElement g = gf::find_primitive(field);
    const std::int64_t n = field.unit_group_order();
    const auto hit = base_hit_exponents(field, g);
    std::vector<std::int64_t> elems;
    elems.reserve(static_cast<std::size_t>(p));
    for (std::int64_t a = 1; a <= n; ++a)
        if (hit[static_cast<std::size_t>(a)]) elems.push_back(a);
    if (static_cast<std::int64_t>(elems.size()) != p)
        throw std::logic_error("construction produced wrong size");

    ConstructionRecord rec;
    rec.set = IntegerSet(std::move(elems), Ambient::cyclic(n));
    rec.method = "bose-chowla";
    rec.p = p;
    rec.generator = g.to_string();
    rec.reduction = field.reduction_string();
    rec.verified = is_sidon(rec.set);
    return rec;
}

namespace {

void check_thin_params(std::int64_t p, std::int64_t ell) {
    if (ell < 1) throw std::invalid_argument("thinness parameter must be >= 1");
    if ((p - 1) % ell != 0) throw std::invalid_argument("thinness parameter must divide p - 1");
}

}  // namespace

ConstructionRecord thin_from_bose_chowla(std::int64_t p, std::int64_t ell) {
    ConstructionRecord base = bose_chowla(p);  // validates p
    check_thin_params(p, ell);
    const std::int64_t m = (p * p - 1) / ell;
    std::vector<std::int64_t> elems;
    elems.reserve(base.set.elements().size());
    for (std::int64_t a : base.set.elements()) {
        std::int64_t r = a % m;
        elems.push_back(r == 0 ? m : r);
    }
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw std::logic_error("quotient reduction collided");

    ConstructionRecord rec;
    rec.set = IntegerSet(std::move(elems), Ambient::cyclic(m));
    rec.method = "thin-quotient";
    rec.p = p;
    rec.ell = ell;
    rec.generator = base.generator;
    rec.reduction = base.reduction;
    rec.verified = thinness(rec.set) <= ell;
    return rec;
}

ConstructionRecord thin_direct(std::int64_t p, std::int64_t ell) {
    const gf::ExtField field(p);
    check_thin_params(p, ell);
    const gf::FieldElement g = gf::find_primitive(field);
    const std::int64_t n = field.unit_group_order();
    const std::int64_t m = n / ell;
    const auto hit = base_hit_exponents(field, g);
    std::vector<std::int64_t> elems;
    for (std::int64_t x = 1; x <= m; ++x) {
        for (std::int64_t y = 1; y <= ell; ++y) {
            const std::int64_t e = (x + y * m - 1) % n + 1;
            if (hit[static_cast<std::size_t>(e)]) {
                elems.push_back(x);
                break;
            }
        }
    }

    ConstructionRecord rec;
    rec.set = IntegerSet(std::move(elems), Ambient::cyclic(m));
    rec.method = "thin-direct";
    rec.p = p;
    rec.ell = ell;
    rec.generator = g.to_string();
    rec.reduction = field.reduction_string();
    rec.verified = thinness(rec.set) <= ell;
    return rec;
}

}  // namespace sidon::gen
