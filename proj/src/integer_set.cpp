#include "sidon/integer_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace sidon {

Ambient Ambient::interval(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("interval bound must be >= 1");
    return {AmbientKind::Interval, n};
}

Ambient Ambient::cyclic(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("cyclic modulus must be >= 2");
    return {AmbientKind::Cyclic, m};
}

std::string Ambient::to_string() const {
    switch (kind) {
        case AmbientKind::Unbounded: return "unbounded";
        case AmbientKind::Interval: return "interval(" + std::to_string(bound) + ")";
        case AmbientKind::Cyclic: return "cyclic(" + std::to_string(bound) + ")";
    }
    return "?";
}

IntegerSet::IntegerSet(std::vector<std::int64_t> elements, Ambient ambient)
    : elems_(std::move(elements)), ambient_(ambient) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw std::invalid_argument("set elements must be >= 1");
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw std::invalid_argument("set elements must be strictly increasing");
    }
    if (ambient_.kind != AmbientKind::Unbounded && !elems_.empty() &&
        elems_.back() > ambient_.bound)
        throw std::invalid_argument("set element exceeds ambient bound");
}

IntegerSet IntegerSet::from_unsorted(std::vector<std::int64_t> elements, Ambient ambient) {
    std::sort(elements.begin(), elements.end());
    return IntegerSet(std::move(elements), ambient);
}

std::int64_t IntegerSet::max_element() const {
    if (elems_.empty()) throw std::invalid_argument("empty set has no maximum");
    return elems_.back();
}

std::int64_t DifferenceHistogram::multiplicity(std::int64_t d) const {
    auto it = entries.find(d);
    return it == entries.end() ? 0 : it->second;
}

std::int64_t DifferenceHistogram::max_multiplicity() const {
    std::int64_t best = 0;
    for (const auto& [d, c] : entries) best = std::max(best, c);
    return best;
}

std::int64_t DifferenceHistogram::total_ordered() const {
    std::int64_t sum = 0;
    for (const auto& [d, c] : entries) sum += c;
    return cyclic ? sum : 2 * sum;
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool is_sidon(const IntegerSet& a) {
    const auto& e = a.elements();
    const std::int64_t k = a.size();
    if (k <= 1) return true;
    std::unordered_set<std::int64_t> seen;
    seen.reserve(static_cast<std::size_t>(k) * (k - 1));
    if (a.ambient().kind == AmbientKind::Cyclic) {
        const std::int64_t m = a.ambient().bound;
        for (std::int64_t i = 0; i < k; ++i)
            for (std::int64_t j = 0; j < k; ++j) {
                if (i == j) continue;
                if (!seen.insert(mod_reduce(e[i] - e[j], m)).second) return false;
            }
    } else {
        for (std::int64_t i = 0; i < k; ++i)
            for (std::int64_t j = i + 1; j < k; ++j)
                if (!seen.insert(e[j] - e[i]).second) return false;
    }
    return true;
}

bool is_weak_sidon(const IntegerSet& a) {
    if (a.ambient().kind == AmbientKind::Cyclic)
        throw std::invalid_argument("weak Sidon is defined for interval or unbounded sets only");
    const auto& e = a.elements();
    const std::int64_t k = a.size();
    if (k <= 1) return true;
    std::unordered_set<std::int64_t> seen;
    seen.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = i + 1; j < k; ++j)
            if (!seen.insert(e[i] + e[j]).second) return false;
    return true;
}

std::int64_t thinness(const IntegerSet& a) {
    if (a.size() <= 1) return 0;
    return difference_histogram(a).max_multiplicity();
}

DifferenceHistogram difference_histogram(const IntegerSet& a) {
    if (a.size() < 2) throw std::invalid_argument("difference_histogram requires |A| >= 2");
    const auto& e = a.elements();
    const std::int64_t k = a.size();
    DifferenceHistogram h;
    if (a.ambient().kind == AmbientKind::Cyclic) {
        h.cyclic = true;
        h.modulus = a.ambient().bound;
        for (std::int64_t i = 0; i < k; ++i)
            for (std::int64_t j = 0; j < k; ++j) {
                if (i == j) continue;
                ++h.entries[mod_reduce(e[i] - e[j], h.modulus)];
            }
    } else {
        for (std::int64_t i = 0; i < k; ++i)
            for (std::int64_t j = i + 1; j < k; ++j) ++h.entries[e[j] - e[i]];
    }
    return h;
}

RepeatedDistances repeated_distances(const IntegerSet& a) {
    if (a.ambient().kind == AmbientKind::Cyclic)
        throw std::invalid_argument("repeated_distances is defined for interval or unbounded sets only");
    RepeatedDistances r;
    if (a.size() < 2) return r;
    for (const auto& [d, c] : difference_histogram(a).entries)
        if (c >= 2) r.counts[d] = c;
    return r;
}

std::vector<OrderedDifference> order_differences(const IntegerSet& a, std::int64_t ell) {
    const std::int64_t k = a.size();
    if (ell < 1 || ell > k - 1)
        throw std::invalid_argument("order bound must satisfy 1 <= ell <= |A| - 1");
    const auto& e = a.elements();
    std::vector<OrderedDifference> out;
    out.reserve(static_cast<std::size_t>(ell) * k);
    for (std::int64_t r = 1; r <= ell; ++r)
        for (std::int64_t i = 0; i + r < k; ++i)
            out.push_back({i + 1, i + r + 1, e[i + r] - e[i]});
    return out;
}

}  // namespace sidon
