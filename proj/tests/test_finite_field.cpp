#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sidon/finite_field.hpp"

using namespace sidon::gf;

namespace {

constexpr std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

std::int64_t mod_pow_int(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

FieldElement random_element(const ExtField& f, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, f.p() - 1);
    return f.make(d(rng), d(rng));
}

}  // namespace

TEST_CASE("primality and factorization") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(313));

    CHECK(distinct_prime_factors(1).empty());
    CHECK(distinct_prime_factors(48) == std::vector<std::int64_t>{2, 3});
    CHECK(distinct_prime_factors(97968) == std::vector<std::int64_t>{2, 3, 13, 157});

    // cross-check against a naive sieve-style factorization
    for (std::int64_t n = 2; n <= 600; ++n) {
        std::vector<std::int64_t> naive;
        std::int64_t rest = n;
        for (std::int64_t d = 2; d <= rest; ++d)
            if (rest % d == 0) {
                naive.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        CHECK(distinct_prime_factors(n) == naive);
    }
}

TEST_CASE("field construction and reduction choice") {
    CHECK_THROWS_AS(ExtField(6), std::invalid_argument);
    CHECK_THROWS_AS(ExtField(1), std::invalid_argument);

    const ExtField f2(2);
    CHECK(f2.reduction_string() == "theta^2 = theta + 1");
    const ExtField f3(3);
    CHECK(f3.nonresidue() == 2);
    CHECK(f3.reduction_string() == "theta^2 = 2");
    const ExtField f7(7);
    CHECK(f7.nonresidue() == 3);

    // the stored s really is the smallest non-residue
    for (std::int64_t p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        const ExtField f(p);
        const std::int64_t s = f.nonresidue();
        CHECK(mod_pow_int(s, (p - 1) / 2, p) == p - 1);
        for (std::int64_t t = 1; t < s; ++t)
            CHECK(mod_pow_int(t, (p - 1) / 2, p) == 1);
    }
}

TEST_CASE("field arithmetic satisfies the ring axioms") {
    std::mt19937 rng(140613);
    for (std::int64_t p : kPrimes) {
        const ExtField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = random_element(f, rng);
            const auto b = random_element(f, rng);
            const auto c = random_element(f, rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.is_zero(f.sub(a, a)));
            // Frobenius is additive in characteristic p
            CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
            // Lagrange over the unit group
            if (!f.is_zero(a)) CHECK(f.pow(a, f.unit_group_order()) == f.one());
        }
        // theta^2 equals the advertised reduction
        const auto t2 = f.mul(f.theta(), f.theta());
        if (p == 2)
            CHECK(t2 == f.make(1, 1));
        else
            CHECK(t2 == f.from_base(f.nonresidue()));
    }
}

TEST_CASE("element validation and base subfield test") {
    const ExtField f5(5);
    CHECK_THROWS_AS(f5.make(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(f5.make(0, -1), std::invalid_argument);
    const ExtField f3(3);
    CHECK_THROWS_AS(f5.add(f5.one(), f3.one()), std::invalid_argument);
    CHECK(f5.in_base(f5.from_base(4)));
    CHECK(f5.in_base(f5.zero()));
    CHECK_FALSE(f5.in_base(f5.theta()));
    CHECK(f5.pow(f5.zero(), 0) == f5.one());
    CHECK(f5.pow(f5.zero(), 3) == f5.zero());
    CHECK_THROWS_AS(f5.pow(f5.one(), -1), std::invalid_argument);
    CHECK_THROWS_AS(f5.element_order(f5.zero()), std::invalid_argument);
}

TEST_CASE("primitive elements generate the whole unit group") {
    for (std::int64_t p : kPrimes) {
        const ExtField f(p);
        const auto g = find_primitive(f);
        const std::int64_t n = f.unit_group_order();
        CHECK(f.pow(g, n) == f.one());
        for (std::int64_t q : distinct_prime_factors(n)) CHECK(f.pow(g, n / q) != f.one());
        CHECK(f.element_order(g) == n);

        // lexicographically no smaller primitive element exists
        bool smaller = false;
        for (std::int64_t x = 0; x <= g.x && !smaller; ++x) {
            const std::int64_t y_hi = (x == g.x) ? g.y - 1 : f.p() - 1;
            for (std::int64_t y = 0; y <= y_hi && !smaller; ++y) {
                const auto e = f.make(x, y);
                if (f.is_zero(e)) continue;
                smaller = f.element_order(e) == n;
            }
        }
        CHECK_FALSE(smaller);
    }

    // documented generators: 1+theta works for p = 3
    const ExtField f3(3);
    CHECK(find_primitive(f3) == f3.make(1, 1));
}

TEST_CASE("discrete log inverts exponentiation") {
    std::mt19937 rng(90210);
    for (std::int64_t p : kPrimes) {
        const ExtField f(p);
        const auto g = find_primitive(f);
        const DiscreteLogTable table(f, g);
        CHECK(table.size() == f.unit_group_order());
        CHECK(table.log(f.one()) == f.unit_group_order());
        CHECK_THROWS_AS(table.log(f.zero()), std::invalid_argument);

        for (int trial = 0; trial < 80; ++trial) {
            auto e = random_element(f, rng);
            if (f.is_zero(e)) continue;
            const std::int64_t a = table.log(e);
            CHECK(a >= 1);
            CHECK(a <= f.unit_group_order());
            CHECK(f.pow(g, a) == e);
            // base-subfield membership is divisibility of the log by p+1
            CHECK(f.in_base(e) == (a % (p + 1) == 0));
        }
    }

    // non-primitive generators are rejected
    const ExtField f7(7);
    const auto g = find_primitive(f7);
    const auto square = f7.mul(g, g);  // order (49-1)/2
    CHECK_THROWS_AS(DiscreteLogTable(f7, square), std::invalid_argument);
}
