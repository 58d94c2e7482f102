#include "hearstkit/extractor.hpp"

#include <thread>

namespace hearstkit {

PairCounts extract_sentences(const std::vector<AnnotatedSentence>& sentences,
                             const std::vector<PatternSpec>& patterns,
                             const MatchOptions& options) {
    PairCounts counts;
    for (const auto& sent : sentences) {
        auto nps = chunk_noun_phrases(sent);
        for (const auto& rec : match_sentence(sent, patterns, nps, options)) {
            counts.add(rec.hypo, rec.hyper, rec.pattern_id);
        }
    }
    return counts;
}

PairCounts extract_corpus(std::istream& in, const std::string& stream_name,
                          const std::vector<PatternSpec>& patterns,
                          const ExtractOptions& options) {
    const int jobs = options.jobs > 0 ? options.jobs : 1;
    MatchOptions mopts;
    mopts.multiword = options.multiword;
    PairCounts counts;

    if (jobs == 1) {
        for_each_sentence(in, stream_name, [&](AnnotatedSentence&& sent) {
            auto nps = chunk_noun_phrases(sent);
            for (const auto& rec : match_sentence(sent, patterns, nps, mopts)) {
                counts.add(rec.hypo, rec.hyper, rec.pattern_id);
            }
        });
        return counts;
    }

    // Batched fork/join: read jobs*kBatch sentences, shard across workers,
    // merge worker-local counts in worker order, repeat.
    constexpr size_t kBatch = 256;
    std::vector<AnnotatedSentence> buffer;
    const size_t capacity = kBatch * static_cast<size_t>(jobs);
    buffer.reserve(capacity);

    auto drain = [&] {
        if (buffer.empty()) return;
        size_t n = buffer.size();
        size_t per = (n + jobs - 1) / jobs;
        std::vector<PairCounts> partial(static_cast<size_t>(jobs));
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            size_t lo = std::min(n, static_cast<size_t>(w) * per);
            size_t hi = std::min(n, lo + per);
            if (lo >= hi) break;
            workers.emplace_back([&, w, lo, hi] {
                std::vector<AnnotatedSentence> slice(buffer.begin() + lo, buffer.begin() + hi);
                partial[static_cast<size_t>(w)] = extract_sentences(slice, patterns, mopts);
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& p : partial) counts.merge(p);
        buffer.clear();
    };

    for_each_sentence(in, stream_name, [&](AnnotatedSentence&& sent) {
        buffer.push_back(std::move(sent));
        if (buffer.size() >= capacity) drain();
    });
    drain();
    return counts;
}

}  // namespace hearstkit
