#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hearstkit/extractor.hpp"

using namespace hearstkit;

namespace {

const char* kSuchAs = "!(feature|property) Y such as X...";

std::vector<PatternSpec> such_as_only() { return {compile_pattern(kSuchAs, "p1")}; }

std::string repeat_corpus(const std::string& block, int copies) {
    std::string out;
    for (int i = 0; i < copies; ++i) {
        if (i) out += "\n";
        out += block;
    }
    return out;
}

const char* kAnimalsSuchAsCats =
    "animals\tanimal\tNNS\n"
    "such\tsuch\tJJ\n"
    "as\tas\tIN\n"
    "cats\tcat\tNNS\n";

}  // namespace

TEST_CASE("count additivity over repeated sentences") {
    std::istringstream in(repeat_corpus(kAnimalsSuchAsCats, 2));
    auto counts = extract_corpus(in, "c", such_as_only());
    CHECK(counts.count("cat", "animal") == 2);
    CHECK(counts.total() == 2);
}

TEST_CASE("empty corpus extracts empty counts") {
    std::istringstream in("");
    auto counts = extract_corpus(in, "c", such_as_only());
    CHECK(counts.empty());
    CHECK(counts.total() == 0);
}

TEST_CASE("extraction is shard-invariant") {
    // Build a corpus of distinct sentences, then compare a single pass
    // against k-sharded merges for several k.
    std::vector<std::string> blocks;
    const char* animals[] = {"cat", "dog", "lion", "tiger", "bear", "wolf"};
    for (const char* a : animals) {
        std::ostringstream b;
        b << "animals\tanimal\tNNS\nsuch\tsuch\tJJ\nas\tas\tIN\n"
          << a << "s\t" << a << "\tNNS\n";
        blocks.push_back(b.str());
    }
    std::string whole;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) whole += "\n";
        whole += blocks[i];
    }
    std::istringstream single(whole);
    auto reference = extract_corpus(single, "c", such_as_only());

    for (size_t k : {2u, 3u, 5u}) {
        PairCounts merged;
        for (size_t shard = 0; shard < k; ++shard) {
            std::string part;
            for (size_t i = shard; i < blocks.size(); i += k) {
                if (!part.empty()) part += "\n";
                part += blocks[i];
            }
            std::istringstream in(part);
            merged.merge(extract_corpus(in, "shard", such_as_only()));
        }
        CHECK(merged.total() == reference.total());
        CHECK(merged.entries() == reference.entries());
    }

    // Thread count must not change anything either.
    std::istringstream again(whole);
    ExtractOptions opts;
    opts.jobs = 4;
    auto threaded = extract_corpus(again, "c", such_as_only(), opts);
    CHECK(threaded.entries() == reference.entries());
}

TEST_CASE("postprocess drops single-pattern pairs regardless of count") {
    PairCounts raw;
    for (int i = 0; i < 5; ++i) raw.add("apple", "fruit", "p1");
    raw.add("cat", "animal", "p1");
    raw.add("cat", "animal", "p2");
    auto cooked = raw.postprocess();
    CHECK(cooked.count("apple", "fruit") == 0);
    CHECK(cooked.count("cat", "animal") == 2);
    CHECK(cooked.total() == 2);
}

TEST_CASE("postprocess drops the weaker direction, keeps ties") {
    PairCounts raw;
    raw.add("cat", "animal", "p1", 4);
    raw.add("cat", "animal", "p2");  // 5 total via 2 patterns
    raw.add("animal", "cat", "p1");
    raw.add("animal", "cat", "p2");  // 2 total via 2 patterns
    raw.add("a", "b", "p1", 3);
    raw.add("a", "b", "p2");         // 4 total, tie with reverse
    raw.add("b", "a", "p2", 3);
    raw.add("b", "a", "p3");
    auto cooked = raw.postprocess();
    CHECK(cooked.count("cat", "animal") == 5);
    CHECK(cooked.count("animal", "cat") == 0);
    CHECK(cooked.count("a", "b") == 4);
    CHECK(cooked.count("b", "a") == 4);
}

TEST_CASE("postprocess is idempotent and equalizes surviving reverses") {
    PairCounts raw;
    raw.add("x", "y", "p1", 2);
    raw.add("x", "y", "p2", 2);
    raw.add("y", "x", "p1", 4);
    raw.add("y", "x", "p3");
    raw.add("solo", "term", "p1", 7);
    auto once = raw.postprocess();
    auto twice = once.postprocess();
    CHECK(once.entries() == twice.entries());
    CHECK(once.total() == twice.total());
    for (const auto& [key, entry] : once.entries()) {
        auto rev = once.entries().find({key.second, key.first});
        if (rev != once.entries().end()) CHECK(entry.count == rev->second.count);
    }
}

TEST_CASE("pair TSV round trip") {
    PairCounts raw;
    raw.add("cat", "animal", "p1", 3);
    raw.add("cat", "animal", "p8");
    raw.add("dog", "animal", "p2", 2);
    std::ostringstream out;
    raw.write_tsv(out, {"# header"});
    std::istringstream in(out.str());
    auto back = PairCounts::read_tsv(in);
    CHECK(back.entries() == raw.entries());
    CHECK(back.total() == raw.total());
}

TEST_CASE("pair TSV is sorted by count then lexicographically") {
    PairCounts raw;
    raw.add("b", "y", "p1", 2);
    raw.add("a", "z", "p1", 2);
    raw.add("c", "x", "p1", 9);
    std::ostringstream out;
    raw.write_tsv(out);
    std::string text = out.str();
    CHECK(text.find("c\tx") < text.find("a\tz"));
    CHECK(text.find("a\tz") < text.find("b\ty"));
}
