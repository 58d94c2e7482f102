#ifndef HEARSTKIT_EXTRACTOR_HPP
#define HEARSTKIT_EXTRACTOR_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hearstkit/matcher.hpp"
#include "hearstkit/pair_counts.hpp"
#include "hearstkit/pattern.hpp"

namespace hearstkit {

struct ExtractOptions {
    bool multiword = false;
    int jobs = 1;
};

// Matches a batch of sentences and aggregates counts. Pure; usable as a
// shard worker.
PairCounts extract_sentences(const std::vector<AnnotatedSentence>& sentences,
                             const std::vector<PatternSpec>& patterns,
                             const MatchOptions& options = {});

// Streams a corpus through the matcher with bounded memory. Counts are
// identical for any `jobs` value and any sharding of the input: merging is
// commutative and associative over integer counts and pattern sets.
PairCounts extract_corpus(std::istream& in, const std::string& stream_name,
                          const std::vector<PatternSpec>& patterns,
                          const ExtractOptions& options = {});

}  // namespace hearstkit

#endif
