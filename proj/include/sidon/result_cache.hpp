#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sidon/solver.hpp"

namespace sidon::search {

// JSON-backed store of search results keyed by (kind, ell, ambient, bound).
// Witnesses are re-verified on lookup; entries that fail to parse or verify
// are dropped with a warning on the given stream. Claimed optimality is
// trusted once the witness checks out.
class ResultCache {
  public:
    explicit ResultCache(std::string path);

    // Loads the file if it exists. Returns false (after warning) when the
    // file was unreadable as JSON; the cache then starts empty.
    bool load(std::ostream& warn);

    std::optional<Result> lookup(const Problem& problem, std::ostream& warn);

    // Records an optimal result (non-optimal ones are ignored).
    void store(const Problem& problem, const Result& result);

    // Writes all records back, sorted by key, one file-wide JSON array.
    void save() const;

    const std::string& path() const { return path_; }
    std::size_t size() const { return records_.size(); }

  private:
    struct Record {
        std::string kind;
        std::int64_t ell = 1;
        std::string ambient;
        std::int64_t bound = 0;
        std::int64_t max_size = 0;
        std::vector<std::int64_t> witness;
    };

    static std::string key_of(const Problem& problem);
    std::string path_;
    std::vector<Record> records_;
};

}  // namespace sidon::search
