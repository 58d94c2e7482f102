#ifndef HEARSTKIT_CHUNKER_HPP
#define HEARSTKIT_CHUNKER_HPP

#include <cstddef>
#include <vector>

#include "hearstkit/corpus.hpp"

namespace hearstkit {

// Flat noun-phrase chunk over a half-open token range. The head is the
// final noun of the chunk (rightmost-noun head rule).
struct NounPhrase {
    size_t start;
    size_t end;
    size_t head_index;
};

// Maximal, non-overlapping chunks matching
//   DT? (JJ|JJR|JJS|NN|NNS|NNP|NNPS|VBN)* (NN|NNS|NNP|NNPS)
// returned in left-to-right order. Sentences without nouns yield {}.
std::vector<NounPhrase> chunk_noun_phrases(const AnnotatedSentence& sentence);

}  // namespace hearstkit

#endif
