#ifndef HEARSTKIT_MATCHER_HPP
#define HEARSTKIT_MATCHER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hearstkit/chunker.hpp"
#include "hearstkit/corpus.hpp"
#include "hearstkit/pattern.hpp"

namespace hearstkit {

struct ExtractionRecord {
    std::string hypo;
    std::string hyper;
    std::string pattern_id;
    std::string source_id;
    size_t span_start;  // sentence-local token range of the match
    size_t span_end;
};

struct MatchOptions {
    // When set, matched NPs with modifiers also emit the full lemmatized
    // span (leading determiner stripped) next to the head-only record.
    bool multiword = false;
};

// Scans one sentence with every pattern. Matching is leftmost and
// non-overlapping per pattern; distinct patterns match independently.
// `nps` must come from chunk_noun_phrases on the same sentence.
std::vector<ExtractionRecord> match_sentence(const AnnotatedSentence& sentence,
                                             const std::vector<PatternSpec>& patterns,
                                             const std::vector<NounPhrase>& nps,
                                             const MatchOptions& options = {});

}  // namespace hearstkit

#endif
