#ifndef HEARSTKIT_CORPUS_HPP
#define HEARSTKIT_CORPUS_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hearstkit {

// One pre-annotated token: surface form, lowercased lemma, Penn tag.
// Unknown tags are preserved; they simply never match any tag class.
struct AnnotatedToken {
    std::string surface;
    std::string lemma;
    std::string pos;
};

struct AnnotatedSentence {
    std::vector<AnnotatedToken> tokens;
    std::string source_id;
};

bool is_noun_tag(const std::string& pos);

// Streaming reader for the tab-separated token-per-line corpus format:
// `surface<TAB>lemma<TAB>pos`, sentences separated by one blank line.
// Calls `sink` once per sentence, in input order; memory use is bounded by
// the largest sentence. Throws std::runtime_error naming the offending
// line on malformed input. An empty stream yields no sentences.
void for_each_sentence(std::istream& in, const std::string& stream_name,
                       const std::function<void(AnnotatedSentence&&)>& sink);

// Convenience: materialize a whole corpus (tests, small fixtures).
std::vector<AnnotatedSentence> parse_corpus(std::istream& in,
                                            const std::string& stream_name = "stream");

// Inverse of parse_corpus on well-formed sentence lists.
void serialize_corpus(std::ostream& out, const std::vector<AnnotatedSentence>& sentences);

}  // namespace hearstkit

#endif
