#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidon/integer_set.hpp"

namespace sidon::search {

enum class Kind { Sidon, Weak, Thin };

Kind kind_from_string(const std::string& name);
std::string kind_name(Kind kind);

struct Problem {
    Kind kind = Kind::Sidon;
    std::int64_t ell = 1;  // Thin only; must be 1 otherwise
    Ambient ambient;       // Interval or Cyclic; Weak requires Interval
};

// True when the set satisfies the problem predicate (Sidon, weak Sidon, or
// ell-thin) inside the problem ambient.
bool satisfies(const Problem& problem, const IntegerSet& set);

struct Config {
    bool use_upper_bound_pruning = true;
    // Interval searches only explore sets containing 1 and break the
    // reflection x -> n+1-x by capping the second element.
    bool use_translation_normalization = true;
    int parallel_degree = 1;
    std::uint64_t node_budget = 1'000'000'000;
};

struct Result {
    std::int64_t max_size = 0;
    IntegerSet witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_by_bound = 0;
    double elapsed_seconds = 0;
    bool optimal = false;  // false when the node budget ran out first
};

// Exact maximum size by depth-first branch and bound. With parallel_degree 1
// the witness is the lexicographically smallest optimum and the node count is
// reproducible; with more workers only max_size is deterministic (the witness
// still verifies).
Result maximize(const Problem& problem, const Config& config = {});

// Independent oracle: enumerates all subsets by bitmask and filters with the
// core predicates. Requires an ambient bound of at most 24.
Result brute_force(const Problem& problem);

struct TableRow {
    std::int64_t n = 0;
    std::int64_t max_size = 0;
    IntegerSet witness;
};

struct TableResult {
    std::vector<TableRow> rows;
    bool complete = false;  // false when the node budget interrupted a row
};

// Extremal values for n = 1..n_max over interval ambients. Rows are computed
// in order and earlier rows sharpen the span pruning of later ones.
TableResult extremal_table(Kind kind, std::int64_t ell, std::int64_t n_max,
                           const Config& config = {});

}  // namespace sidon::search
