#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidon {

enum class AmbientKind { Unbounded, Interval, Cyclic };

// Ambient domain of a set: all positive integers, the interval [1, n], or the
// cyclic group Z_M with canonical representatives in [1, M].
struct Ambient {
    AmbientKind kind = AmbientKind::Unbounded;
    std::int64_t bound = 0;  // n for Interval, M for Cyclic, unused otherwise

    static Ambient unbounded() { return {AmbientKind::Unbounded, 0}; }
    static Ambient interval(std::int64_t n);
    static Ambient cyclic(std::int64_t m);

    bool operator==(const Ambient&) const = default;
    std::string to_string() const;
};

// Finite set of positive integers, stored strictly increasing.
class IntegerSet {
  public:
    IntegerSet() = default;
    // Elements must be strictly increasing, >= 1, and within the ambient bound.
    explicit IntegerSet(std::vector<std::int64_t> elements,
                        Ambient ambient = Ambient::unbounded());

    // Sorts first, then applies the same validation as the main constructor.
    static IntegerSet from_unsorted(std::vector<std::int64_t> elements,
                                    Ambient ambient = Ambient::unbounded());

    const std::vector<std::int64_t>& elements() const { return elems_; }
    const Ambient& ambient() const { return ambient_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    std::int64_t max_element() const;  // throws on empty set

    bool operator==(const IntegerSet&) const = default;

  private:
    std::vector<std::int64_t> elems_;
    Ambient ambient_;
};

// Multiset of differences. For a cyclic ambient the entries count ordered
// pairs per nonzero residue; for interval or unbounded sets only positive
// differences are stored and each entry counts unordered pairs once.
struct DifferenceHistogram {
    bool cyclic = false;
    std::int64_t modulus = 0;  // set when cyclic
    std::map<std::int64_t, std::int64_t> entries;

    std::int64_t multiplicity(std::int64_t d) const;
    std::int64_t max_multiplicity() const;
    // Mass counted over ordered pairs: always k(k-1).
    std::int64_t total_ordered() const;
};

struct RepeatedDistances {
    // difference value -> number of unordered pairs realizing it (>= 2)
    std::map<std::int64_t, std::int64_t> counts;
};

struct OrderedDifference {
    std::int64_t i = 0;      // 1-based index of the smaller element
    std::int64_t j = 0;      // 1-based index of the larger element
    std::int64_t value = 0;  // a_j - a_i

    bool operator==(const OrderedDifference&) const = default;
};

// All positive pairwise differences distinct (equivalently, all pairwise sums
// a_i + a_j with i <= j distinct). Cyclic sets use differences mod M.
bool is_sidon(const IntegerSet& a);

// Pairwise sums a_i + a_j distinct for i < j only. Interval/unbounded only.
bool is_weak_sidon(const IntegerSet& a);

// max over c != 0 of |A and (A + c)|; 0 for |A| <= 1.
std::int64_t thinness(const IntegerSet& a);

// Requires |A| >= 2.
DifferenceHistogram difference_histogram(const IntegerSet& a);

// Positive differences realized by at least two unordered pairs, with their
// pair counts. Interval/unbounded only.
RepeatedDistances repeated_distances(const IntegerSet& a);

// Differences a_j - a_i for all i < j <= i + ell, with 1-based indices,
// ordered by (j - i, i). Requires 1 <= ell <= |A| - 1.
std::vector<OrderedDifference> order_differences(const IntegerSet& a, std::int64_t ell);

}  // namespace sidon
