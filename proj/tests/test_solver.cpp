#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "sidon/bounds.hpp"
#include "sidon/solver.hpp"

using namespace sidon;
using namespace sidon::search;

namespace {

Problem interval_problem(Kind kind, std::int64_t n, std::int64_t ell = 1) {
    Problem pb;
    pb.kind = kind;
    pb.ell = ell;
    pb.ambient = Ambient::interval(n);
    return pb;
}

Problem cyclic_problem(Kind kind, std::int64_t m, std::int64_t ell = 1) {
    Problem pb;
    pb.kind = kind;
    pb.ell = ell;
    pb.ambient = Ambient::cyclic(m);
    return pb;
}

}  // namespace

TEST_CASE("kind names round trip") {
    for (Kind k : {Kind::Sidon, Kind::Weak, Kind::Thin})
        CHECK(kind_from_string(kind_name(k)) == k);
    CHECK(kind_name(Kind::Sidon) == "sidon");
    CHECK(kind_name(Kind::Weak) == "weak");
    CHECK(kind_name(Kind::Thin) == "thin");
    CHECK_THROWS_AS(kind_from_string("b2"), std::invalid_argument);
}

TEST_CASE("satisfies wraps the core predicates") {
    CHECK(satisfies(interval_problem(Kind::Sidon, 7), IntegerSet({1, 2, 5, 7})));
    CHECK_FALSE(satisfies(interval_problem(Kind::Sidon, 7), IntegerSet({1, 2, 3})));
    CHECK(satisfies(interval_problem(Kind::Weak, 3), IntegerSet({1, 2, 3})));
    CHECK_FALSE(satisfies(interval_problem(Kind::Weak, 4), IntegerSet({1, 2, 3, 4})));
    CHECK(satisfies(interval_problem(Kind::Thin, 7, 2), IntegerSet({1, 2, 4, 6, 7})));
    CHECK_FALSE(satisfies(interval_problem(Kind::Thin, 7, 1), IntegerSet({1, 2, 4, 6, 7})));
    CHECK(satisfies(cyclic_problem(Kind::Sidon, 8), IntegerSet({1, 6, 7}, Ambient::cyclic(8))));
}

TEST_CASE("solved instances") {
    auto r = maximize(interval_problem(Kind::Sidon, 7));
    CHECK(r.max_size == 4);
    CHECK(r.optimal);
    CHECK(r.witness.elements() == std::vector<std::int64_t>{1, 2, 5, 7});

    r = maximize(interval_problem(Kind::Sidon, 1));
    CHECK(r.max_size == 1);
    CHECK(r.witness.elements() == std::vector<std::int64_t>{1});

    r = maximize(interval_problem(Kind::Weak, 3));
    CHECK(r.max_size == 3);
    CHECK(r.witness.elements() == std::vector<std::int64_t>{1, 2, 3});

    r = maximize(interval_problem(Kind::Thin, 7, 2));
    CHECK(r.max_size == 5);
    CHECK(r.witness.elements() == std::vector<std::int64_t>{1, 2, 4, 6, 7});

    // an (n-1)-thin subset of [n] can be everything
    for (std::int64_t n : {2, 3, 5, 8}) {
        r = maximize(interval_problem(Kind::Thin, n, n - 1));
        CHECK(r.max_size == n);
        CHECK(r.witness.size() == n);
    }
}

TEST_CASE("brute force spot values") {
    CHECK(brute_force(interval_problem(Kind::Sidon, 3)).max_size == 2);
    CHECK(brute_force(interval_problem(Kind::Sidon, 12)).max_size == 5);
    CHECK(brute_force(interval_problem(Kind::Weak, 4)).max_size == 3);
    CHECK_THROWS_AS(brute_force(interval_problem(Kind::Sidon, 25)), std::invalid_argument);
}

TEST_CASE("maximize matches brute force on small intervals") {
    for (std::int64_t n = 1; n <= 16; ++n) {
        struct Case {
            Kind kind;
            std::int64_t ell;
        };
        for (const Case c : {Case{Kind::Sidon, 1}, Case{Kind::Weak, 1}, Case{Kind::Thin, 2},
                             Case{Kind::Thin, 3}}) {
            const auto pb = interval_problem(c.kind, n, c.kind == Kind::Thin ? c.ell : 1);
            const auto fast = maximize(pb);
            const auto slow = brute_force(pb);
            CAPTURE(n);
            CAPTURE(kind_name(c.kind));
            CHECK(fast.max_size == slow.max_size);
            CHECK(fast.optimal);
            CHECK(satisfies(pb, fast.witness));
            CHECK(fast.witness.size() == fast.max_size);
        }
    }
}

TEST_CASE("maximize matches brute force on cyclic groups") {
    for (std::int64_t m = 2; m <= 14; ++m) {
        for (std::int64_t ell : {1, 2}) {
            const auto pb = cyclic_problem(ell == 1 ? Kind::Sidon : Kind::Thin, m, ell);
            const auto fast = maximize(pb);
            const auto slow = brute_force(pb);
            CAPTURE(m);
            CAPTURE(ell);
            CHECK(fast.max_size == slow.max_size);
            CHECK(satisfies(pb, fast.witness));
        }
    }
    CHECK(maximize(cyclic_problem(Kind::Sidon, 7)).max_size == 3);
    CHECK(maximize(cyclic_problem(Kind::Sidon, 8)).max_size == 3);
    CHECK(maximize(cyclic_problem(Kind::Thin, 4, 2)).max_size == 3);
}

TEST_CASE("sidon equals 1-thin and monotonicity") {
    for (std::int64_t n : {5, 9, 14, 21, 30}) {
        CHECK(maximize(interval_problem(Kind::Sidon, n)).max_size ==
              maximize(interval_problem(Kind::Thin, n, 1)).max_size);
    }

    std::int64_t prev = 0;
    for (std::int64_t n = 1; n <= 30; ++n) {
        const auto v = maximize(interval_problem(Kind::Sidon, n)).max_size;
        CHECK(v >= prev);
        prev = v;
    }

    // growing ell only helps
    std::int64_t prev_ell = 0;
    for (std::int64_t ell = 1; ell <= 5; ++ell) {
        const auto v = maximize(interval_problem(Kind::Thin, 18, ell)).max_size;
        CHECK(v >= prev_ell);
        prev_ell = v;
    }

    // weak dominates strict per n
    for (std::int64_t n : {4, 7, 11, 16}) {
        CHECK(maximize(interval_problem(Kind::Weak, n)).max_size >=
              maximize(interval_problem(Kind::Sidon, n)).max_size);
    }
}

TEST_CASE("configuration does not change the answer") {
    struct Case {
        Kind kind;
        std::int64_t n, ell;
    };
    for (const Case c : {Case{Kind::Sidon, 24, 1}, Case{Kind::Weak, 14, 1},
                         Case{Kind::Thin, 15, 2}}) {
        const auto pb = interval_problem(c.kind, c.n, c.ell);
        const auto base = maximize(pb);

        Config no_prune;
        no_prune.use_upper_bound_pruning = false;
        const auto a = maximize(pb, no_prune);
        CHECK(a.max_size == base.max_size);
        CHECK(a.witness.elements() == base.witness.elements());

        Config no_norm;
        no_norm.use_translation_normalization = false;
        const auto b = maximize(pb, no_norm);
        CHECK(b.max_size == base.max_size);
        CHECK(b.witness.elements() == base.witness.elements());
        CHECK(b.nodes_explored >= base.nodes_explored);

        Config wide;
        wide.parallel_degree = 4;
        const auto par = maximize(pb, wide);
        CHECK(par.max_size == base.max_size);
        CHECK(satisfies(pb, par.witness));
        CHECK(par.witness.size() == par.max_size);
    }
}

TEST_CASE("sequential search is reproducible") {
    const auto pb = interval_problem(Kind::Sidon, 40);
    const auto first = maximize(pb);
    const auto second = maximize(pb);
    CHECK(first.max_size == second.max_size);
    CHECK(first.witness.elements() == second.witness.elements());
    CHECK(first.nodes_explored == second.nodes_explored);
    CHECK(first.pruned_by_bound == second.pruned_by_bound);
}

TEST_CASE("node budget exhaustion degrades gracefully") {
    Config tiny;
    tiny.node_budget = 50;
    const auto pb = interval_problem(Kind::Sidon, 60);
    const auto r = maximize(pb, tiny);
    CHECK_FALSE(r.optimal);
    CHECK(r.max_size >= 1);
    CHECK(satisfies(pb, r.witness));
    CHECK(r.witness.size() == r.max_size);

    // the same budget through the parallel path
    tiny.parallel_degree = 3;
    const auto rp = maximize(pb, tiny);
    CHECK_FALSE(rp.optimal);
    CHECK(satisfies(pb, rp.witness));
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(maximize(Problem{Kind::Sidon, 1, Ambient::unbounded()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(maximize(cyclic_problem(Kind::Weak, 9)), std::invalid_argument);
    CHECK_THROWS_AS(maximize(interval_problem(Kind::Thin, 9, 0)), std::invalid_argument);
    CHECK_THROWS_AS(maximize(interval_problem(Kind::Sidon, 9, 2)), std::invalid_argument);
    CHECK_THROWS_AS(maximize(interval_problem(Kind::Weak, 9, 2)), std::invalid_argument);
}

TEST_CASE("extremal table") {
    const auto table = extremal_table(Kind::Sidon, 1, 12, {});
    REQUIRE(table.complete);
    REQUIRE(table.rows.size() == 12);
    const std::vector<std::int64_t> expect{1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5};
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(table.rows[i].n == static_cast<std::int64_t>(i) + 1);
        CHECK(table.rows[i].max_size == expect[i]);
        const auto pb = interval_problem(Kind::Sidon, table.rows[i].n);
        CHECK(satisfies(pb, table.rows[i].witness));
        CHECK(table.rows[i].witness.size() == table.rows[i].max_size);
    }

    // rows agree with standalone solves and respect the closed-form ceiling
    for (const auto& row : table.rows) {
        CHECK(row.max_size == maximize(interval_problem(Kind::Sidon, row.n)).max_size);
        const auto bound =
            bounds::closed_form_bound(bounds::BoundKind::Cilleruelo, row.n);
        CHECK(row.max_size <= bound.implied_max);
    }

    const auto thin = extremal_table(Kind::Thin, 2, 7, {});
    REQUIRE(thin.complete);
    CHECK(thin.rows.back().max_size == 5);

    const auto weak = extremal_table(Kind::Weak, 1, 10, {});
    REQUIRE(weak.complete);
    for (std::size_t i = 0; i < weak.rows.size(); ++i)
        CHECK(weak.rows[i].max_size >= table.rows[i].max_size);

    Config tiny;
    tiny.node_budget = 20;
    const auto cut = extremal_table(Kind::Sidon, 1, 40, tiny);
    CHECK_FALSE(cut.complete);
    CHECK(cut.rows.size() < 40);

    CHECK_THROWS_AS(extremal_table(Kind::Sidon, 1, 0, {}), std::invalid_argument);
}
