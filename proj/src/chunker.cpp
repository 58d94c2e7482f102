#include "hearstkit/chunker.hpp"

namespace hearstkit {

namespace {

bool is_modifier_tag(const std::string& pos) {
    return pos == "JJ" || pos == "JJR" || pos == "JJS" || pos == "VBN" || is_noun_tag(pos);
}

}  // namespace

std::vector<NounPhrase> chunk_noun_phrases(const AnnotatedSentence& sentence) {
    const auto& toks = sentence.tokens;
    std::vector<NounPhrase> chunks;
    size_t i = 0;
    while (i < toks.size()) {
        size_t j = i;
        if (toks[j].pos == "DT") ++j;
        // Longest run of modifiers/nouns, then trim back to the last noun.
        size_t k = j;
        size_t last_noun = toks.size();  // sentinel: none
        while (k < toks.size() && is_modifier_tag(toks[k].pos)) {
            if (is_noun_tag(toks[k].pos)) last_noun = k;
            ++k;
        }
        if (last_noun == toks.size()) {
            ++i;
            continue;
        }
        chunks.push_back(NounPhrase{i, last_noun + 1, last_noun});
        i = last_noun + 1;
    }
    return chunks;
}

}  // namespace hearstkit
