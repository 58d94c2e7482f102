#include <doctest.h>

#include <sstream>

#include "hearstkit/chunker.hpp"
#include "hearstkit/corpus.hpp"
#include "hearstkit/rng.hpp"

using namespace hearstkit;

namespace {

AnnotatedSentence make_sentence(std::initializer_list<std::pair<const char*, const char*>> toks) {
    AnnotatedSentence s;
    for (const auto& [lemma, pos] : toks) s.tokens.push_back({lemma, lemma, pos});
    s.source_id = "test#0";
    return s;
}

}  // namespace

TEST_CASE("parse_corpus single token round trip") {
    std::istringstream in("cats\tcat\tNNS\n\n");
    auto sents = parse_corpus(in);
    REQUIRE(sents.size() == 1);
    REQUIRE(sents[0].tokens.size() == 1);
    CHECK(sents[0].tokens[0].lemma == "cat");
    CHECK(sents[0].tokens[0].pos == "NNS");
}

TEST_CASE("parse_corpus blank line separates sentences") {
    std::istringstream in("a\ta\tDT\ncat\tcat\tNN\n\ndog\tdog\tNN\n");
    auto sents = parse_corpus(in);
    REQUIRE(sents.size() == 2);
    CHECK(sents[0].tokens.size() == 2);
    CHECK(sents[1].tokens.size() == 1);
}

TEST_CASE("parse_corpus reports malformed lines with their number") {
    std::istringstream in("cats\tcat\tNNS\nbroken\tline\n");
    CHECK_THROWS_WITH_AS(parse_corpus(in, "f"), doctest::Contains("f:2"), std::runtime_error);
}

TEST_CASE("parse_corpus empty input yields empty sequence") {
    std::istringstream in("");
    CHECK(parse_corpus(in).empty());
}

TEST_CASE("parse_corpus lowercases lemmas") {
    std::istringstream in("Paris\tParis\tNNP\n");
    auto sents = parse_corpus(in);
    CHECK(sents[0].tokens[0].lemma == "paris");
    CHECK(sents[0].tokens[0].surface == "Paris");
}

TEST_CASE("serialize then parse is the identity") {
    Xoshiro256pp rng(7);
    std::vector<AnnotatedSentence> corpus;
    const char* lemmas[] = {"cat", "dog", "run", "the", "big"};
    const char* tags[] = {"NN", "NNS", "VB", "DT", "JJ"};
    for (int s = 0; s < 20; ++s) {
        AnnotatedSentence sent;
        const size_t len = 1 + rng.below(8);
        for (size_t t = 0; t < len; ++t) {
            size_t k = rng.below(5);
            sent.tokens.push_back({lemmas[k], lemmas[k], tags[rng.below(5)]});
        }
        corpus.push_back(std::move(sent));
    }
    std::ostringstream out;
    serialize_corpus(out, corpus);
    std::istringstream in(out.str());
    auto back = parse_corpus(in);
    REQUIRE(back.size() == corpus.size());
    for (size_t s = 0; s < corpus.size(); ++s) {
        REQUIRE(back[s].tokens.size() == corpus[s].tokens.size());
        for (size_t t = 0; t < corpus[s].tokens.size(); ++t) {
            CHECK(back[s].tokens[t].lemma == corpus[s].tokens[t].lemma);
            CHECK(back[s].tokens[t].pos == corpus[s].tokens[t].pos);
        }
    }
}

TEST_CASE("chunker: determiner adjective noun") {
    auto s = make_sentence({{"the", "DT"}, {"big", "JJ"}, {"cat", "NN"}});
    auto nps = chunk_noun_phrases(s);
    REQUIRE(nps.size() == 1);
    CHECK(nps[0].start == 0);
    CHECK(nps[0].end == 3);
    CHECK(nps[0].head_index == 2);
}

TEST_CASE("chunker: bare noun") {
    auto s = make_sentence({{"cat", "NN"}});
    auto nps = chunk_noun_phrases(s);
    REQUIRE(nps.size() == 1);
    CHECK(nps[0].start == 0);
    CHECK(nps[0].head_index == 0);
}

TEST_CASE("chunker: no nouns, no chunks") {
    auto s = make_sentence({{"run", "VBZ"}, {"quickly", "RB"}});
    CHECK(chunk_noun_phrases(s).empty());
}

TEST_CASE("chunker: head is the final noun, trailing modifiers trimmed") {
    auto s = make_sentence(
        {{"a", "DT"}, {"compound", "JJ"}, {"noun", "NN"}, {"phrase", "NN"}, {"runs", "VBZ"}});
    auto nps = chunk_noun_phrases(s);
    REQUIRE(nps.size() == 1);
    CHECK(nps[0].end == 4);
    CHECK(nps[0].head_index == 3);
}

TEST_CASE("chunker: determiner mid-sentence starts a new chunk") {
    auto s = make_sentence({{"cat", "NN"}, {"the", "DT"}, {"dog", "NN"}});
    auto nps = chunk_noun_phrases(s);
    REQUIRE(nps.size() == 2);
    CHECK(nps[0].end == 1);
    CHECK(nps[1].start == 1);
    CHECK(nps[1].head_index == 2);
}

TEST_CASE("chunker properties: non-overlap, order, noun heads") {
    Xoshiro256pp rng(99);
    const char* tags[] = {"DT", "JJ", "NN", "NNS", "VBZ", "RB", "VBN", "NNP"};
    for (int trial = 0; trial < 200; ++trial) {
        AnnotatedSentence s;
        const size_t len = 1 + rng.below(12);
        for (size_t t = 0; t < len; ++t)
            s.tokens.push_back({"w", "w", tags[rng.below(8)]});
        auto nps = chunk_noun_phrases(s);
        size_t prev_end = 0;
        for (const auto& np : nps) {
            CHECK(np.start >= prev_end);
            CHECK(np.start <= np.head_index);
            CHECK(np.head_index < np.end);
            CHECK(is_noun_tag(s.tokens[np.head_index].pos));
            prev_end = np.end;
        }
    }
}
