#include "sidon/result_cache.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "json.hpp"

namespace sidon::search {

using nlohmann::json;

namespace {

std::string ambient_tag(const Ambient& ambient) {
    switch (ambient.kind) {
        case AmbientKind::Interval: return "interval";
        case AmbientKind::Cyclic: return "cyclic";
        case AmbientKind::Unbounded: break;
    }
    throw std::invalid_argument("cache keys need a bounded ambient");
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

bool ResultCache::load(std::ostream& warn) {
    records_.clear();
    std::ifstream in(path_);
    if (!in) return true;  // absent file: start empty, not an error
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
        warn << "warning: cache file " << path_ << " is not a JSON array; ignoring it\n";
        return false;
    }
    for (const auto& item : doc) {
        Record rec;
        try {
            rec.kind = item.at("kind").get<std::string>();
            rec.ell = item.at("ell").get<std::int64_t>();
            rec.ambient = item.at("ambient").get<std::string>();
            rec.bound = item.at("bound").get<std::int64_t>();
            rec.max_size = item.at("max_size").get<std::int64_t>();
            rec.witness = item.at("witness").get<std::vector<std::int64_t>>();
        } catch (const std::exception& e) {
            warn << "warning: dropping malformed cache entry in " << path_ << ": "
                 << e.what() << "\n";
            continue;
        }
        records_.push_back(std::move(rec));
    }
    return true;
}

std::optional<Result> ResultCache::lookup(const Problem& problem, std::ostream& warn) {
    const std::string kind = kind_name(problem.kind);
    const std::string ambient = ambient_tag(problem.ambient);
    for (auto it = records_.begin(); it != records_.end(); ++it) {
        if (it->kind != kind || it->ell != problem.ell || it->ambient != ambient ||
            it->bound != problem.ambient.bound)
            continue;
        try {
            IntegerSet witness(it->witness, problem.ambient);
            if (it->max_size != witness.size() || !satisfies(problem, witness))
                throw std::invalid_argument("witness does not certify the claimed size");
            Result res;
            res.max_size = it->max_size;
            res.witness = std::move(witness);
            res.optimal = true;
            return res;
        } catch (const std::exception& e) {
            warn << "warning: dropping corrupt cache entry (" << kind << ", ell "
                 << it->ell << ", " << ambient << " " << it->bound << "): " << e.what()
                 << "\n";
            records_.erase(it);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void ResultCache::store(const Problem& problem, const Result& result) {
    if (!result.optimal) return;
    Record rec;
    rec.kind = kind_name(problem.kind);
    rec.ell = problem.ell;
    rec.ambient = ambient_tag(problem.ambient);
    rec.bound = problem.ambient.bound;
    rec.max_size = result.max_size;
    rec.witness = result.witness.elements();
    for (auto& existing : records_) {
        if (existing.kind == rec.kind && existing.ell == rec.ell &&
            existing.ambient == rec.ambient && existing.bound == rec.bound) {
            existing = std::move(rec);
            return;
        }
    }
    records_.push_back(std::move(rec));
}

void ResultCache::save() const {
    auto sorted = records_;
    std::sort(sorted.begin(), sorted.end(), [](const Record& a, const Record& b) {
        return std::tie(a.kind, a.ell, a.ambient, a.bound) <
               std::tie(b.kind, b.ell, b.ambient, b.bound);
    });
    json doc = json::array();
    for (const auto& rec : sorted) {
        json item;
        item["kind"] = rec.kind;
        item["ell"] = rec.ell;
        item["ambient"] = rec.ambient;
        item["bound"] = rec.bound;
        item["max_size"] = rec.max_size;
        item["witness"] = rec.witness;
        doc.push_back(std::move(item));
    }
    std::ofstream out(path_);
    if (!out) throw std::runtime_error("cannot write cache file " + path_);
    out << doc.dump(1) << "\n";
}

}  // namespace sidon::search
