#include "sidon/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sidon::search {

Kind kind_from_string(const std::string& name) {
    if (name == "sidon") return Kind::Sidon;
    if (name == "weak") return Kind::Weak;
    if (name == "thin") return Kind::Thin;
    throw std::invalid_argument("unknown problem kind: " + name);
}

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::Sidon: return "sidon";
        case Kind::Weak: return "weak";
        case Kind::Thin: return "thin";
    }
    throw std::logic_error("unreachable kind");
}

namespace {

void validate(const Problem& pb) {
    if (pb.ambient.kind == AmbientKind::Unbounded)
        throw std::invalid_argument("maximization needs a bounded ambient");
    if (pb.ambient.bound < 1)
        throw std::invalid_argument("ambient bound must be positive");
    if (pb.kind == Kind::Weak && pb.ambient.kind == AmbientKind::Cyclic)
        throw std::invalid_argument("weak Sidon search is interval-only");
    if (pb.kind == Kind::Thin) {
        if (pb.ell < 1) throw std::invalid_argument("thinness level must be >= 1");
    } else if (pb.ell != 1) {
        throw std::invalid_argument("ell is only meaningful for thin problems");
    }
}

// Largest k allowed in any window of L consecutive integers, from the closed
// form upper bounds. Weak sets get the counting bound: C(k,2) distinct sums
// inside [3, 2L-1].
std::int64_t closed_form_cap(Kind kind, std::int64_t ell, std::int64_t L) {
    if (L <= 0) return 0;
    if (L <= 2) return L;
    double bound = 0;
    switch (kind) {
        case Kind::Sidon: {
            const double d = static_cast<double>(L);
            bound = std::sqrt(d) + std::sqrt(std::sqrt(d)) + 0.5;
            break;
        }
        case Kind::Thin: {
            const double d = static_cast<double>(ell) * static_cast<double>(L);
            bound = std::sqrt(d) + std::sqrt(std::sqrt(d)) + 0.5;
            break;
        }
        case Kind::Weak: {
            const double avail = static_cast<double>(2 * L - 3);
            bound = (1.0 + std::sqrt(1.0 + 8.0 * avail)) / 2.0;
            break;
        }
    }
    auto k = static_cast<std::int64_t>(std::floor(bound + 1e-9));
    return std::min(k, L);
}

struct Shared {
    std::atomic<std::int64_t> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> pruned{0};
    std::atomic<bool> out_of_budget{false};
    std::uint64_t budget = 0;
    std::mutex mu;
    std::vector<std::int64_t> witness;

    void offer(const std::vector<std::int64_t>& cand) {
        std::lock_guard<std::mutex> lock(mu);
        if (cand.size() > witness.size()) {
            witness = cand;
            best.store(static_cast<std::int64_t>(witness.size()),
                       std::memory_order_relaxed);
        }
    }
};

class Engine {
  public:
    Engine(const Problem& pb, const Config& cfg, Shared* shared,
           const std::vector<std::int64_t>& span_bound)
        : kind_(pb.kind),
          ell_(pb.ell),
          bound_(pb.ambient.bound),
          cyclic_(pb.ambient.kind == AmbientKind::Cyclic),
          normalize_(cfg.use_translation_normalization && !cyclic_),
          prune_span_(cfg.use_upper_bound_pruning),
          span_bound_(span_bound),
          shared_(shared) {
        switch (kind_) {
            case Kind::Sidon:
                diff_used_.assign(bound_ + 1, 0);
                break;
            case Kind::Thin:
                diff_count_.assign(bound_ + 1, 0);
                break;
            case Kind::Weak:
                sum_used_.assign(2 * bound_ + 1, 0);
                break;
        }
        cur_.reserve(64);
        tentative_.reserve(64);
    }

    void run_root(std::int64_t x1) {
        cur_.clear();
        cur_.push_back(x1);
        dfs();
        cur_.pop_back();
    }

    // Parallel entry: search the subtree rooted at the prefix {x1, x2}.
    void run_prefix(std::int64_t x1, std::int64_t x2) {
        cur_.clear();
        cur_.push_back(x1);
        if (!admissible(x2)) return;
        apply(x2);
        cur_.push_back(x2);
        dfs();
        cur_.pop_back();
        undo(x2);
    }

    void finish() {
        if (pending_nodes_) {
            shared_->nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
            pending_nodes_ = 0;
        }
        if (pending_pruned_) {
            shared_->pruned.fetch_add(pending_pruned_, std::memory_order_relaxed);
            pending_pruned_ = 0;
        }
    }

    bool admissible(std::int64_t x) {
        switch (kind_) {
            case Kind::Sidon:
                return cyclic_ ? admissible_sidon_cyclic(x) : admissible_sidon(x);
            case Kind::Thin:
                return cyclic_ ? admissible_thin_cyclic(x) : admissible_thin(x);
            case Kind::Weak:
                return admissible_weak(x);
        }
        return false;
    }

    void apply(std::int64_t x) { update(x, +1); }
    void undo(std::int64_t x) { update(x, -1); }

  private:
    void count_node() {
        if (++pending_nodes_ >= 4096) {
            const std::uint64_t total =
                shared_->nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) +
                pending_nodes_;
            pending_nodes_ = 0;
            if (total > shared_->budget)
                shared_->out_of_budget.store(true, std::memory_order_relaxed);
        } else if (shared_->nodes.load(std::memory_order_relaxed) + pending_nodes_ >
                   shared_->budget) {
            shared_->out_of_budget.store(true, std::memory_order_relaxed);
        }
    }

    bool stopped() const {
        return shared_->out_of_budget.load(std::memory_order_relaxed);
    }

    std::int64_t mod_diff(std::int64_t a, std::int64_t b) const {
        std::int64_t r = (a - b) % bound_;
        if (r < 0) r += bound_;
        return r;
    }

    bool admissible_sidon(std::int64_t x) const {
        for (std::int64_t a : cur_)
            if (diff_used_[x - a]) return false;
        return true;
    }

    bool admissible_thin(std::int64_t x) const {
        for (std::int64_t a : cur_)
            if (diff_count_[x - a] + 1 > ell_) return false;
        return true;
    }

    bool admissible_weak(std::int64_t x) const {
        for (std::int64_t a : cur_)
            if (sum_used_[x + a]) return false;
        return true;
    }

    // Marks both residues of each new difference tentatively so that a
    // collision between two new pairs (2x = a+b mod M) is caught as well.
    bool admissible_sidon_cyclic(std::int64_t x) {
        tentative_.clear();
        bool ok = true;
        for (std::int64_t a : cur_) {
            const std::int64_t r1 = mod_diff(x, a);
            const std::int64_t r2 = bound_ - r1;
            if (r1 == r2 || diff_used_[r1] || diff_used_[r2]) {
                ok = false;
                break;
            }
            diff_used_[r1] = diff_used_[r2] = 1;
            tentative_.push_back(r1);
            tentative_.push_back(r2);
        }
        for (std::int64_t r : tentative_) diff_used_[r] = 0;
        return ok;
    }

    bool admissible_thin_cyclic(std::int64_t x) {
        tentative_.clear();
        bool ok = true;
        for (std::int64_t a : cur_) {
            const std::int64_t r1 = mod_diff(x, a);
            const std::int64_t r2 = bound_ - r1;
            if (++diff_count_[r1] > ell_) {
                tentative_.push_back(r1);
                ok = false;
                break;
            }
            tentative_.push_back(r1);
            if (++diff_count_[r2] > ell_) {
                tentative_.push_back(r2);
                ok = false;
                break;
            }
            tentative_.push_back(r2);
        }
        for (std::int64_t r : tentative_) --diff_count_[r];
        return ok;
    }

    void update(std::int64_t x, int delta) {
        switch (kind_) {
            case Kind::Sidon:
                if (cyclic_) {
                    for (std::int64_t a : cur_) {
                        const std::int64_t r = mod_diff(x, a);
                        diff_used_[r] = diff_used_[bound_ - r] =
                            static_cast<std::uint8_t>(delta > 0);
                    }
                } else {
                    for (std::int64_t a : cur_)
                        diff_used_[x - a] = static_cast<std::uint8_t>(delta > 0);
                }
                break;
            case Kind::Thin:
                if (cyclic_) {
                    for (std::int64_t a : cur_) {
                        const std::int64_t r = mod_diff(x, a);
                        diff_count_[r] += delta;
                        diff_count_[bound_ - r] += delta;
                    }
                } else {
                    for (std::int64_t a : cur_) diff_count_[x - a] += delta;
                }
                break;
            case Kind::Weak:
                for (std::int64_t a : cur_)
                    sum_used_[x + a] = static_cast<std::uint8_t>(delta > 0);
                break;
        }
    }

    void dfs() {
        if (stopped()) return;
        count_node();
        const auto size = static_cast<std::int64_t>(cur_.size());
        if (size > shared_->best.load(std::memory_order_relaxed))
            shared_->offer(cur_);

        std::int64_t limit = bound_;
        if (normalize_ && size == 1) limit = (bound_ + 2) / 2;
        // the reflection cap clips this candidate list below bound_, so the
        // list no longer contains every element a deeper extension may use
        // and counting it would over-prune
        const bool clipped = limit < bound_;

        // recursion can grow scratch_, so index it fresh instead of holding a
        // reference across the dfs call below
        const std::size_t depth = cur_.size();
        if (scratch_.size() < depth + 1) scratch_.resize(depth + 1);
        scratch_[depth].clear();
        for (std::int64_t x = cur_.back() + 1; x <= limit; ++x)
            if (admissible(x)) scratch_[depth].push_back(x);

        const auto total = static_cast<std::int64_t>(scratch_[depth].size());
        for (std::int64_t i = 0; i < total; ++i) {
            const std::int64_t best_now =
                shared_->best.load(std::memory_order_relaxed);
            if (!clipped && size + (total - i) <= best_now) {
                ++pending_pruned_;
                break;
            }
            const std::int64_t x = scratch_[depth][i];
            if (prune_span_ && size + 1 + span_bound_[bound_ - x] <= best_now) {
                // The span bound only shrinks as x grows, so the rest of the
                // candidate list is dead too.
                ++pending_pruned_;
                break;
            }
            apply(x);
            cur_.push_back(x);
            dfs();
            cur_.pop_back();
            undo(x);
            if (stopped()) return;
        }
    }

    Kind kind_;
    std::int64_t ell_;
    std::int64_t bound_;
    bool cyclic_;
    bool normalize_;
    bool prune_span_;
    const std::vector<std::int64_t>& span_bound_;
    Shared* shared_;
    std::vector<std::uint8_t> diff_used_;
    std::vector<std::int64_t> diff_count_;
    std::vector<std::uint8_t> sum_used_;
    std::vector<std::int64_t> cur_;
    std::vector<std::int64_t> tentative_;
    std::vector<std::vector<std::int64_t>> scratch_;
    std::uint64_t pending_nodes_ = 0;
    std::uint64_t pending_pruned_ = 0;
};

struct Extra {
    std::int64_t seed_best = 0;
    const std::vector<std::int64_t>* seed_witness = nullptr;
    // exact_spans[L] is the true maximum over spans of length L; entries
    // beyond its length fall back to the closed forms.
    const std::vector<std::int64_t>* exact_spans = nullptr;
};

Result run(const Problem& pb, const Config& cfg, const Extra& extra) {
    validate(pb);
    if (cfg.node_budget == 0) throw std::invalid_argument("node budget must be positive");
    if (cfg.parallel_degree < 1)
        throw std::invalid_argument("parallel degree must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    const std::int64_t N = pb.ambient.bound;

    std::vector<std::int64_t> span_bound(N + 1, 0);
    for (std::int64_t L = 0; L <= N; ++L) {
        std::int64_t cap = closed_form_cap(pb.kind, pb.ell, L);
        if (extra.exact_spans && L < static_cast<std::int64_t>(extra.exact_spans->size()))
            cap = std::min(cap, (*extra.exact_spans)[L]);
        span_bound[L] = cap;
    }

    Shared shared;
    shared.budget = cfg.node_budget;
    if (extra.seed_best > 0) {
        shared.best.store(extra.seed_best, std::memory_order_relaxed);
        shared.witness = *extra.seed_witness;
    }

    const bool normalize =
        cfg.use_translation_normalization && pb.ambient.kind == AmbientKind::Interval;

    if (cfg.parallel_degree == 1) {
        Engine engine(pb, cfg, &shared, span_bound);
        if (normalize)
            engine.run_root(1);
        else
            for (std::int64_t x1 = 1; x1 <= N && !shared.out_of_budget.load(); ++x1)
                engine.run_root(x1);
        engine.finish();
    } else {
        // Workers pull subtree tasks from a shared queue. Normalized searches
        // split on the second element (x2 > 0); otherwise each first element
        // is one task and x2 stays 0.
        std::vector<std::pair<std::int64_t, std::int64_t>> tasks;
        if (normalize) {
            shared.offer({1});
            const std::int64_t limit = (N + 2) / 2;
            for (std::int64_t x2 = 2; x2 <= limit; ++x2) tasks.emplace_back(1, x2);
        } else {
            for (std::int64_t x1 = 1; x1 <= N; ++x1) tasks.emplace_back(x1, 0);
        }
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            Engine engine(pb, cfg, &shared, span_bound);
            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= tasks.size() || shared.out_of_budget.load()) break;
                const auto [x1, x2] = tasks[i];
                if (x2 == 0)
                    engine.run_root(x1);
                else
                    engine.run_prefix(x1, x2);
            }
            engine.finish();
        };
        std::vector<std::thread> pool;
        const std::size_t threads = std::min<std::size_t>(
            static_cast<std::size_t>(cfg.parallel_degree), tasks.size() + 1);
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Result res;
    res.max_size = static_cast<std::int64_t>(shared.witness.size());
    res.witness = IntegerSet(shared.witness, pb.ambient);
    res.nodes_explored = shared.nodes.load();
    res.pruned_by_bound = shared.pruned.load();
    res.optimal = !shared.out_of_budget.load();
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace

bool satisfies(const Problem& problem, const IntegerSet& set) {
    switch (problem.kind) {
        case Kind::Sidon: return is_sidon(set);
        case Kind::Weak: return is_weak_sidon(set);
        case Kind::Thin: return thinness(set) <= problem.ell;
    }
    throw std::logic_error("unreachable kind");
}

Result maximize(const Problem& problem, const Config& config) {
    return run(problem, config, Extra{});
}

Result brute_force(const Problem& problem) {
    validate(problem);
    const std::int64_t N = problem.ambient.bound;
    if (N > 24)
        throw std::invalid_argument("brute force is limited to bounds <= 24");
    const auto start = std::chrono::steady_clock::now();

    Result res;
    std::vector<std::int64_t> elems;
    elems.reserve(N);
    const std::uint32_t top = (N >= 32) ? 0 : (std::uint32_t{1} << N);
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        ++res.nodes_explored;
        if (std::popcount(mask) <= static_cast<int>(res.max_size)) continue;
        elems.clear();
        for (std::int64_t i = 0; i < N; ++i)
            if (mask & (std::uint32_t{1} << i)) elems.push_back(i + 1);
        IntegerSet candidate(elems, problem.ambient);
        if (satisfies(problem, candidate)) {
            res.max_size = static_cast<std::int64_t>(elems.size());
            res.witness = candidate;
        }
    }
    if (res.max_size == 0) res.witness = IntegerSet({}, problem.ambient);
    res.optimal = true;
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

TableResult extremal_table(Kind kind, std::int64_t ell, std::int64_t n_max,
                           const Config& config) {
    if (n_max < 1) throw std::invalid_argument("table needs n_max >= 1");
    TableResult table;
    std::vector<std::int64_t> exact{0};
    std::vector<std::int64_t> prev_witness;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Problem pb{kind, ell, Ambient::interval(n)};
        Extra extra;
        extra.exact_spans = &exact;
        if (!prev_witness.empty()) {
            extra.seed_best = static_cast<std::int64_t>(prev_witness.size());
            extra.seed_witness = &prev_witness;
        }
        Result row = run(pb, config, extra);
        if (!row.optimal) {
            table.complete = false;
            return table;
        }
        exact.push_back(row.max_size);
        prev_witness = row.witness.elements();
        table.rows.push_back({n, row.max_size, row.witness});
    }
    table.complete = true;
    return table;
}

}  // namespace sidon::search
