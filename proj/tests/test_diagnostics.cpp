#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "sidon/constructions.hpp"
#include "sidon/diagnostics.hpp"
#include "sidon/integer_set.hpp"

using namespace sidon;
using namespace sidon::diag;

namespace {

IntegerSet random_sidon(std::mt19937& rng, std::int64_t n, std::int64_t k_cap) {
    std::vector<std::int64_t> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::int64_t> acc;
    for (std::int64_t x : order) {
        if (static_cast<std::int64_t>(acc.size()) >= k_cap) break;
        auto trial = acc;
        trial.push_back(x);
        std::sort(trial.begin(), trial.end());
        if (is_sidon(IntegerSet(trial))) acc = std::move(trial);
    }
    return IntegerSet(acc, Ambient::interval(n));
}

IntegerSet random_weak_sidon(std::mt19937& rng, std::int64_t n, std::int64_t k_cap) {
    std::vector<std::int64_t> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::int64_t> acc;
    for (std::int64_t x : order) {
        if (static_cast<std::int64_t>(acc.size()) >= k_cap) break;
        auto trial = acc;
        trial.push_back(x);
        std::sort(trial.begin(), trial.end());
        if (is_weak_sidon(IntegerSet(trial))) acc = std::move(trial);
    }
    return IntegerSet(acc, Ambient::interval(n));
}

IntegerSet random_thin(std::mt19937& rng, std::int64_t n, std::int64_t ell,
                       std::int64_t k_cap) {
    std::vector<std::int64_t> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::int64_t> acc;
    for (std::int64_t x : order) {
        if (static_cast<std::int64_t>(acc.size()) >= k_cap) break;
        auto trial = acc;
        trial.push_back(x);
        std::sort(trial.begin(), trial.end());
        if (thinness(IntegerSet(trial)) <= ell) acc = std::move(trial);
    }
    return IntegerSet(acc, Ambient::interval(n));
}

}  // namespace

TEST_CASE("translate degree profile matches a direct recount") {
    std::mt19937 rng(11881);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n = 5 + static_cast<std::int64_t>(rng() % 60);
        std::set<std::int64_t> picked;
        const std::int64_t want =
            1 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(10, n));
        std::uniform_int_distribution<std::int64_t> val(1, n);
        while (static_cast<std::int64_t>(picked.size()) < want) picked.insert(val(rng));
        IntegerSet set({picked.begin(), picked.end()}, Ambient::interval(n));
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 20);

        const auto profile = translate_degree_profile(set, m);
        CHECK(profile.n == n);
        CHECK(profile.m == m);
        CHECK(profile.k == set.size());
        REQUIRE(static_cast<std::int64_t>(profile.degrees.size()) == n + m - 1);
        std::int64_t mass = 0;
        for (std::int64_t x = 1; x <= n + m - 1; ++x) {
            std::int64_t direct = 0;
            for (std::int64_t i = 0; i < m; ++i)
                direct += picked.count(x - i);
            CHECK(profile.degrees[x - 1] == direct);
            CHECK(direct <= std::min(m, set.size()));
            mass += direct;
        }
        CHECK(mass == set.size() * m);
    }

    const auto two = translate_degree_profile(IntegerSet({1, 2}, Ambient::interval(2)), 2);
    CHECK(two.degrees == std::vector<std::int32_t>{1, 2, 1});
    const auto gap = translate_degree_profile(IntegerSet({1, 3}, Ambient::interval(3)), 2);
    CHECK(gap.degrees == std::vector<std::int32_t>{1, 1, 1, 1});
    CHECK_THROWS_AS(translate_degree_profile(IntegerSet({1}, Ambient::cyclic(5)), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(translate_degree_profile(IntegerSet({1}, Ambient::interval(3)), 0),
                    std::invalid_argument);
}

TEST_CASE("defect equals the raw second-moment expression and is nonnegative") {
    std::mt19937 rng(22111);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 10 + static_cast<std::int64_t>(rng() % 200);
        const auto set = random_sidon(rng, n, 2 + rng() % 12);
        if (set.empty()) continue;
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 30);
        const auto profile = translate_degree_profile(set, m);
        const Rational k_exact = defect(profile);

        Rational sum = 0, sum_sq = 0;
        for (const std::int32_t d : profile.degrees) {
            sum += d;
            sum_sq += Rational(d) * d;
        }
        const Rational direct = sum_sq - sum * sum / Rational(profile.v());
        CHECK(k_exact == direct);
        CHECK(k_exact >= 0);
    }

    CHECK(defect(translate_degree_profile(IntegerSet({1, 2}, Ambient::interval(2)), 2)) ==
          Rational(2, 3));  // 6 - 16/3
    CHECK(defect(translate_degree_profile(IntegerSet({1, 3}, Ambient::interval(3)), 2)) == 0);
    // m = 1 with n = max(A): uniform degrees, K = k - k^2/n
    CHECK(defect(translate_degree_profile(IntegerSet({1, 2, 5, 7}, Ambient::interval(7)), 1)) ==
          Rational(12, 7));
}

TEST_CASE("window variance bound never exceeds the defect") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 20 + static_cast<std::int64_t>(rng() % 150);
        const auto set = random_sidon(rng, n, 3 + rng() % 10);
        if (set.size() < 2) continue;
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 20);
        const auto profile = translate_degree_profile(set, m);
        const Rational k_exact = defect(profile);

        std::set<std::int64_t> win;
        std::uniform_int_distribution<std::int64_t> pos(1, profile.v());
        const std::int64_t want = 1 + static_cast<std::int64_t>(rng() % 12);
        while (static_cast<std::int64_t>(win.size()) < want) win.insert(pos(rng));
        const Rational bound =
            window_variance_bound(profile, {win.begin(), win.end()});
        CHECK(bound >= 0);
        CHECK(bound <= k_exact);
    }

    const auto peak = translate_degree_profile(IntegerSet({1, 2}, Ambient::interval(2)), 2);
    CHECK(window_variance_bound(peak, {2}) == Rational(4, 9));  // (4/3 - 2)^2
    CHECK(window_variance_bound(peak, {1, 2, 3}) == 0);         // full window averages out

    const auto profile = translate_degree_profile(IntegerSet({1, 2, 5, 7}, Ambient::interval(7)), 3);
    CHECK_THROWS_AS(window_variance_bound(profile, {}), std::invalid_argument);
    CHECK_THROWS_AS(window_variance_bound(profile, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(window_variance_bound(profile, {0}), std::invalid_argument);
    CHECK_THROWS_AS(window_variance_bound(profile, {100}), std::invalid_argument);
}

TEST_CASE("translate intersection audit agrees with difference multiplicities") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        const std::int64_t n = 10 + static_cast<std::int64_t>(rng() % 100);
        std::set<std::int64_t> picked;
        const std::int64_t want = 2 + static_cast<std::int64_t>(rng() % 9);
        std::uniform_int_distribution<std::int64_t> val(1, n);
        while (static_cast<std::int64_t>(picked.size()) < want) picked.insert(val(rng));
        IntegerSet set({picked.begin(), picked.end()}, Ambient::interval(n));
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 25);

        const auto audit = translate_intersection_audit(set, m);
        const auto hist = difference_histogram(set);
        std::int64_t expect_max = 0, expect_pairs2 = 0;
        for (std::int64_t d = 1; d <= m - 1; ++d) {
            const std::int64_t mult = hist.multiplicity(d);
            expect_max = std::max(expect_max, mult);
            if (mult == 2) expect_pairs2 += m - d;
        }
        CHECK(audit.max_pair_intersection == expect_max);
        CHECK(audit.pairs_with_size_2 == expect_pairs2);
    }

    CHECK(translate_intersection_audit(IntegerSet({1, 2, 5, 7}), 10).max_pair_intersection ==
          1);
    const auto weak_audit = translate_intersection_audit(IntegerSet({1, 2, 3}), 4);
    CHECK(weak_audit.max_pair_intersection == 2);
    CHECK(weak_audit.pairs_with_size_2 == 3);  // the repeated difference 1, m - 1 pairs
    CHECK(translate_intersection_audit(IntegerSet({1, 5}), 2).max_pair_intersection == 0);

    CHECK_THROWS_AS(translate_intersection_audit(IntegerSet({1, 2}), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        translate_intersection_audit(IntegerSet({1, 2}, Ambient::cyclic(9)), 3),
        std::invalid_argument);
}

TEST_CASE("intersection ceilings by set kind") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n = 30 + static_cast<std::int64_t>(rng() % 100);
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 15);

        const auto sidon_set = random_sidon(rng, n, 10);
        if (sidon_set.size() >= 2)
            CHECK(translate_intersection_audit(sidon_set, m).max_pair_intersection <= 1);

        const auto weak_set = random_weak_sidon(rng, n, 10);
        if (weak_set.size() >= 2) {
            const auto audit = translate_intersection_audit(weak_set, m);
            CHECK(audit.max_pair_intersection <= 2);
            CHECK(audit.pairs_with_size_2 <= weak_set.size() * m);
        }

        const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 3);
        const auto thin_set = random_thin(rng, n, ell, 12);
        if (thin_set.size() >= 2)
            CHECK(translate_intersection_audit(thin_set, m).max_pair_intersection <= ell);
    }
}

TEST_CASE("order-limited difference sum and slack anchors") {
    const IntegerSet set({1, 2, 5, 7});
    CHECK(order_limited_difference_sum(set, 1) == 6);   // 1 + 3 + 2
    CHECK(order_limited_difference_sum(set, 2) == 15);  // + 4 + 5
    CHECK(order_limited_difference_sum(set, 3) == 21);  // + 6
    CHECK(slack(set, 2) == 0);  // T = 5, baseline 15, sum 15
    CHECK(slack(set, 1) == 0);  // T = 3, baseline 6, sum 6
    CHECK(slack(set, 3) == 0);  // T = 6, baseline 21, sum 21

    const auto chain = verify_difference_chain(set, 2);
    CHECK(chain.holds);
    CHECK(chain.sum == 15);
    CHECK(chain.baseline == 15);
    CHECK(chain.rhs == 21);
    CHECK(chain.lhs == Rational(25, 2));

    CHECK(slack(IntegerSet({1, 2, 5, 11}), 1) == 4);  // gaps 1, 3, 6 vs baseline 6
    CHECK_THROWS_AS(slack(IntegerSet({1, 2, 3}), 1), std::invalid_argument);  // not Sidon
    CHECK_THROWS_AS(slack(IntegerSet({1, 2, 5, 7}), 0), std::invalid_argument);
    CHECK_THROWS_AS(slack(IntegerSet({1, 2, 5, 7}), 4), std::invalid_argument);
}

TEST_CASE("difference chain is strict on random sidon sets") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t n = 10 + static_cast<std::int64_t>(rng() % 800);
        const auto set = random_sidon(rng, n, 2 + rng() % 39);
        if (set.size() < 2) continue;
        const std::int64_t ell =
            1 + static_cast<std::int64_t>(rng() % static_cast<unsigned long>(set.size() - 1));
        const auto chain = verify_difference_chain(set, ell);
        CHECK(chain.holds);
        const std::int64_t t = ell * set.size() - ell * (ell + 1) / 2;
        CHECK(chain.lhs < Rational(chain.baseline));
        CHECK(chain.baseline == t * (t + 1) / 2);
        CHECK(chain.baseline <= chain.sum);
        CHECK(chain.sum < chain.rhs);
        CHECK(slack(set, ell) == chain.sum - chain.baseline);
        CHECK(slack(set, ell) >= 0);
    }
}

TEST_CASE("weak slack") {
    const auto ws = weak_slack(IntegerSet({1, 2, 3}), 2);
    CHECK(ws.value == 0);
    CHECK(ws.repeated_distance_count == 1);

    // max{48-3,0} + max{49-3,0} + max{1-3,0}
    CHECK(weak_slack(IntegerSet({1, 2, 50}), 2).value == 91);

    std::mt19937 rng(707);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 10 + static_cast<std::int64_t>(rng() % 400);
        const auto set = random_weak_sidon(rng, n, 3 + rng() % 20);
        if (set.size() < 2) continue;
        const std::int64_t ell =
            1 + static_cast<std::int64_t>(rng() % static_cast<unsigned long>(set.size() - 1));
        const auto w = weak_slack(set, ell);
        CHECK(w.value >= 0);
        // P members repeat exactly twice and |P| <= k - 2
        const auto rep = repeated_distances(set);
        CHECK(w.repeated_distance_count == static_cast<std::int64_t>(rep.counts.size()));
        for (const auto& [d, c] : rep.counts) CHECK(c == 2);
        CHECK(static_cast<std::int64_t>(rep.counts.size()) <=
              std::max<std::int64_t>(set.size() - 2, 0));
    }

    CHECK_THROWS_AS(weak_slack(IntegerSet({1, 2, 3, 4}), 1), std::invalid_argument);
}

TEST_CASE("discrepancy stats match direct window counts") {
    const auto anchor =
        discrepancy_stats(IntegerSet({1, 2, 5, 7}, Ambient::interval(7)), 2, 5);
    CHECK(anchor.r1 == 2);
    CHECK(anchor.r2 == 1);
    CHECK(anchor.R1 == 2);
    CHECK(anchor.R2 == 2);

    std::mt19937 rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 20 + static_cast<std::int64_t>(rng() % 300);
        const auto set = random_sidon(rng, n, 3 + rng() % 15);
        if (set.empty()) continue;
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % (n / 2));
        const std::int64_t s = 1 + static_cast<std::int64_t>(rng() % (m / 2 ? m / 2 : 1));
        if (s > m - s) continue;
        const auto st = discrepancy_stats(set, s, m);

        auto mass = [&](std::int64_t lo, std::int64_t hi) {
            std::int64_t c = 0;
            for (std::int64_t x : set.elements())
                if (x >= lo && x <= hi) ++c;
            return c;
        };
        CHECK(st.r1 == mass(1, s));
        CHECK(st.r2 == mass(n - s + 1, n));
        CHECK(st.R1 == mass(1, m - s));
        CHECK(st.R2 == mass(n - (m - s) + 1, n));
        CHECK(st.r() == st.r1 + st.r2);
        CHECK(st.R() >= st.r());  // wider windows hold at least as much
    }

    CHECK_THROWS_AS(discrepancy_stats(IntegerSet({1, 2}, Ambient::interval(10)), 0, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(discrepancy_stats(IntegerSet({1, 2}, Ambient::interval(10)), 3, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(discrepancy_stats(IntegerSet({1, 2}, Ambient::interval(5)), 1, 9),
                    std::invalid_argument);
    CHECK_THROWS_AS(discrepancy_stats(IntegerSet({1, 2}), 1, 4), std::invalid_argument);
}

TEST_CASE("case report trichotomy and window consistency") {
    const double alpha = 0.137, beta = 0.037, eps = 0.235;
    struct Input {
        IntegerSet set;
        std::int64_t m, s, L;
    };
    std::vector<Input> inputs;
    inputs.push_back({gen::greedy_sidon(2000).set, 299, 11, 5});
    inputs.push_back({gen::greedy_sidon(10000).set, 1000, 37, 8});
    {
        const auto bc = gen::bose_chowla(31);  // 31 elements mod 960
        inputs.push_back({IntegerSet(bc.set.elements(), Ambient::interval(960)), 172, 6, 4});
    }

    for (const auto& in : inputs) {
        const auto rep = case_report(in.set, alpha, beta, eps);
        CHECK(rep.n == in.set.ambient().bound);
        CHECK(rep.k == in.set.size());
        CHECK(rep.m == in.m);
        CHECK(rep.s == in.s);
        CHECK(rep.L == in.L);
        CHECK(rep.L < rep.k);

        // recompute the trichotomy from the reported stats
        const double q = std::sqrt(std::sqrt(static_cast<double>(rep.n)));
        const double low_gate = 2 * (1 - eps) * q;
        const double high_gate = 2 * (1 + eps) * q;
        if (rep.stats.r() <= low_gate)
            CHECK(rep.kind == CaseKind::LowEdgeMass);
        else if (rep.stats.R() >= high_gate)
            CHECK(rep.kind == CaseKind::HighEdgeMass);
        else
            CHECK(rep.kind == CaseKind::MiddleGap);

        CHECK(rep.K_exact >= 0);
        CHECK(rep.C_exact >= 0);
        CHECK(rep.C_exact == slack(in.set, rep.L));
        CHECK(rep.claim_reference_gain > 0);
        CHECK(rep.has_window_bound == (rep.kind != CaseKind::MiddleGap));
        if (rep.has_window_bound) {
            CHECK(rep.window.size() == static_cast<std::size_t>(2 * rep.s));
            CHECK(rep.window_bound >= 0);
            CHECK(rep.window_bound <= rep.K_exact);
            CHECK(rep.window_bound ==
                  window_variance_bound(translate_degree_profile(in.set, rep.m), rep.window));
        }
    }

    // below the diagnostic scale: s collapses to zero
    const auto small = gen::bose_chowla(7);
    CHECK_THROWS_AS(case_report(IntegerSet(small.set.elements(), Ambient::interval(48)),
                                alpha, beta, eps),
                    std::invalid_argument);
    CHECK_THROWS_AS(case_report(IntegerSet({1, 2, 5}, Ambient::interval(3000)), alpha,
                                beta, eps),
                    std::invalid_argument);  // L >= k
    CHECK_THROWS_AS(case_report(IntegerSet({1, 2, 3}, Ambient::interval(10000)), alpha,
                                beta, eps),
                    std::invalid_argument);  // not Sidon
    CHECK_THROWS_AS(case_report(gen::greedy_sidon(10000).set, 0.137, 0.08, 0.235),
                    std::invalid_argument);  // needs 2 beta < alpha
}

TEST_CASE("refined bounds") {
    CHECK(refined_bound_from_slack(10000, 0.0, 0.0) == 110.5);
    CHECK(refined_bound_from_slack(10000, 0.0, 5000.0) == 110.0);
    CHECK(refined_bound_from_slack(10000, 0.137, 0.0) > 110.5);  // the alpha penalty

    const double v = refined_bound_from_slack(10000, 0.137, 5000.0);
    const double expect =
        100.0 + 10.0 -
        ((2 * 5000.0 / 10000) - 10.0 * 0.137 * 0.137 * (1 - 0.137)) /
            (2 * (1 - 0.137) * (1 - 0.137)) +
        0.5;
    CHECK(v == doctest::Approx(expect).epsilon(1e-12));

    CHECK(refined_bound_from_defect(10000, 0.0).value == 112.0);
    CHECK(refined_bound_from_defect(10000, 4000.0).value ==
          doctest::Approx(111.8).epsilon(1e-14));

    const auto small = refined_bound_from_defect(10000, 1000.0);
    CHECK_FALSE(small.large_defect);
    CHECK(small.value == doctest::Approx(100.0 + 10.0 - 1000.0 / 20000 + 2).epsilon(1e-12));
    const auto big = refined_bound_from_defect(10000, 2.1e6);
    CHECK(big.large_defect);  // 2 n^(3/2) = 2e6
    CHECK_FALSE(refined_bound_from_defect(10000, 1.9e6).large_defect);

    CHECK_THROWS_AS(refined_bound_from_slack(0, 0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(refined_bound_from_slack(100, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(refined_bound_from_slack(100, 0.1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(refined_bound_from_defect(100, -0.5), std::invalid_argument);
}
