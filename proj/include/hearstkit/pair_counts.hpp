#ifndef HEARSTKIT_PAIR_COUNTS_HPP
#define HEARSTKIT_PAIR_COUNTS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hearstkit {

// Aggregated (hyponym, hypernym) extraction counts with per-pattern
// provenance. `total` is the sum of all counts and doubles as the matched
// record count.
class PairCounts {
public:
    struct Entry {
        uint64_t count = 0;
        std::set<std::string> patterns;

        bool operator==(const Entry&) const = default;
    };

    using Key = std::pair<std::string, std::string>;
    using Map = std::map<Key, Entry>;

    void add(const std::string& hypo, const std::string& hyper, const std::string& pattern_id,
             uint64_t count = 1);
    void merge(const PairCounts& other);

    uint64_t total() const { return total_; }
    size_t unique_pairs() const { return entries_.size(); }
    size_t unique_terms() const;
    bool empty() const { return entries_.empty(); }

    uint64_t count(const std::string& hypo, const std::string& hyper) const;
    const Map& entries() const { return entries_; }

    // Postprocessing, in this order:
    //  (a) drop pairs extracted by fewer than two distinct patterns;
    //  (b) for each unordered {x,y} present in both directions, drop the
    //      direction with the strictly smaller count (ties keep both).
    // The total is recomputed. Idempotent.
    PairCounts postprocess() const;

    // TSV: hypo<TAB>hyper<TAB>count<TAB>comma-joined-pattern-ids, sorted by
    // descending count then lexicographically. header lines are emitted
    // verbatim before the data.
    void write_tsv(std::ostream& out, const std::vector<std::string>& header_lines = {}) const;
    static PairCounts read_tsv(std::istream& in, const std::string& name = "pairs");

private:
    Map entries_;
    uint64_t total_ = 0;
};

}  // namespace hearstkit

#endif
