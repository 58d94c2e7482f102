#include "hearstkit/matcher.hpp"

#include <algorithm>
#include <unordered_set>

namespace hearstkit {

namespace {

struct Binding {
    size_t np_index;
    SlotRole role;
};

// Matcher state for one sentence. chunk_of maps a token position to the
// index of the chunk covering it, or -1.
struct SentenceView {
    const AnnotatedSentence& sent;
    const std::vector<NounPhrase>& nps;
    std::vector<int> chunk_of;
    std::unordered_set<std::string> lemma_set;

    SentenceView(const AnnotatedSentence& s, const std::vector<NounPhrase>& n)
        : sent(s), nps(n), chunk_of(s.tokens.size(), -1) {
        for (size_t c = 0; c < nps.size(); ++c) {
            for (size_t t = nps[c].start; t < nps[c].end; ++t) chunk_of[t] = static_cast<int>(c);
        }
        for (const auto& tok : s.tokens) lemma_set.insert(tok.lemma);
    }

    const std::string& lemma(size_t p) const { return sent.tokens[p].lemma; }
    const std::string& pos(size_t p) const { return sent.tokens[p].pos; }
    size_t size() const { return sent.tokens.size(); }
};

bool in_set(const std::vector<std::string>& set, const std::string& lemma) {
    return std::find(set.begin(), set.end(), lemma) != set.end();
}

// An NP slot positioned at p binds the chunk covering p, provided the head
// is still at or ahead of p (elements before the slot may have consumed the
// chunk's determiner or modifiers). Binding records the whole chunk and
// consumes through its end.
bool slot_chunk_at(const SentenceView& sv, size_t p, size_t* np_index) {
    if (p >= sv.size()) return false;
    int c = sv.chunk_of[p];
    if (c < 0) return false;
    if (p > sv.nps[static_cast<size_t>(c)].head_index) return false;
    *np_index = static_cast<size_t>(c);
    return true;
}

class PatternMatcher {
public:
    PatternMatcher(const SentenceView& sv, const PatternSpec& pat) : sv_(sv), pat_(pat) {}

    // Tries to match the whole pattern with its first element aligned at
    // `start`. On success fills bindings and the consumed range end.
    bool try_at(size_t start, std::vector<Binding>* bindings, size_t* end) {
        bindings_.clear();
        if (!match_from(0, start, end)) return false;
        *bindings = bindings_;
        return true;
    }

private:
    bool match_from(size_t ei, size_t p, size_t* end) {
        if (ei == pat_.elements.size()) {
            *end = p;
            return true;
        }
        const PatternElement& e = pat_.elements[ei];
        if (e.optional) {
            if (match_element(e, ei, p, end)) return true;
            return match_from(ei + 1, p, end);
        }
        return match_element(e, ei, p, end);
    }

    bool match_element(const PatternElement& e, size_t ei, size_t p, size_t* end) {
        switch (e.kind) {
            case PatternElement::Kind::Literal:
                if (p < sv_.size() && sv_.lemma(p) == e.lemmas[0])
                    return match_from(ei + 1, p + 1, end);
                return false;
            case PatternElement::Kind::Alternation:
                if (p < sv_.size() && in_set(e.lemmas, sv_.lemma(p)))
                    return match_from(ei + 1, p + 1, end);
                return false;
            case PatternElement::Kind::NegatedAlternation:
                // Lookbehind-style guard: consumes the token if one is
                // there; at the sentence boundary a pattern-initial guard
                // is vacuously satisfied.
                if (p < sv_.size() && !in_set(e.lemmas, sv_.lemma(p)) &&
                    match_from(ei + 1, p + 1, end))
                    return true;
                if (ei == 0 && p == 0) return match_from(ei + 1, p, end);
                return false;
            case PatternElement::Kind::PosClass:
                if (p < sv_.size() && sv_.pos(p) == e.tag) return match_from(ei + 1, p + 1, end);
                return false;
            case PatternElement::Kind::NpSlot:
                return e.list ? match_list_slot(e, ei, p, end) : match_np_slot(e, ei, p, end);
        }
        return false;
    }

    bool match_np_slot(const PatternElement& e, size_t ei, size_t p, size_t* end) {
        size_t c;
        if (!slot_chunk_at(sv_, p, &c)) return false;
        bindings_.push_back(Binding{c, e.role});
        if (match_from(ei + 1, sv_.nps[c].end, end)) return true;
        bindings_.pop_back();
        return false;
    }

    // List slot: NP ((,)? (and|or)? NP)* with at least one separator token
    // between conjuncts. Greedy, with backtracking over the conjunct count.
    bool match_list_slot(const PatternElement& e, size_t ei, size_t p, size_t* end) {
        size_t c;
        if (!slot_chunk_at(sv_, p, &c)) return false;
        std::vector<size_t> conjuncts{c};
        std::vector<size_t> ends{sv_.nps[c].end};
        for (;;) {
            size_t q = ends.back();
            size_t q2 = q;
            bool sep = false;
            if (q2 < sv_.size() && sv_.lemma(q2) == ",") {
                ++q2;
                sep = true;
            }
            if (q2 < sv_.size() && (sv_.lemma(q2) == "and" || sv_.lemma(q2) == "or")) {
                ++q2;
                sep = true;
            }
            size_t next;
            if (!sep || !slot_chunk_at(sv_, q2, &next)) break;
            conjuncts.push_back(next);
            ends.push_back(sv_.nps[next].end);
        }
        for (size_t count = conjuncts.size(); count >= 1; --count) {
            for (size_t i = 0; i < count; ++i)
                bindings_.push_back(Binding{conjuncts[i], e.role});
            if (match_from(ei + 1, ends[count - 1], end)) return true;
            bindings_.resize(bindings_.size() - count);
        }
        return false;
    }

    const SentenceView& sv_;
    const PatternSpec& pat_;
    std::vector<Binding> bindings_;
};

// Required single-lemma literals; a sentence lacking any of them cannot
// match, which skips most pattern/sentence combinations cheaply.
std::vector<const std::string*> required_literals(const PatternSpec& pat) {
    std::vector<const std::string*> req;
    for (const auto& e : pat.elements) {
        if (e.kind == PatternElement::Kind::Literal && !e.optional) req.push_back(&e.lemmas[0]);
    }
    return req;
}

// Term variants emitted for one bound chunk: always the head lemma, plus
// the determiner-stripped full span when multiword emission is on.
void term_variants(const SentenceView& sv, const NounPhrase& np, bool multiword,
                   std::vector<std::string>* out) {
    out->clear();
    out->push_back(sv.lemma(np.head_index));
    if (!multiword) return;
    size_t start = np.start;
    if (start < np.end && sv.pos(start) == "DT") ++start;
    if (np.end - start < 2) return;
    std::string joined;
    for (size_t t = start; t < np.end; ++t) {
        if (t > start) joined += ' ';
        joined += sv.lemma(t);
    }
    out->push_back(std::move(joined));
}

}  // namespace

std::vector<ExtractionRecord> match_sentence(const AnnotatedSentence& sentence,
                                             const std::vector<PatternSpec>& patterns,
                                             const std::vector<NounPhrase>& nps,
                                             const MatchOptions& options) {
    std::vector<ExtractionRecord> records;
    if (sentence.tokens.empty() || nps.empty()) return records;
    SentenceView sv(sentence, nps);

    std::vector<std::string> hypo_terms, hyper_terms;
    for (const auto& pat : patterns) {
        bool feasible = true;
        for (const auto* lit : required_literals(pat)) {
            if (!sv.lemma_set.count(*lit)) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        PatternMatcher matcher(sv, pat);
        size_t pos = 0;
        while (pos < sv.size()) {
            std::vector<Binding> bindings;
            size_t end = pos;
            if (!matcher.try_at(pos, &bindings, &end)) {
                ++pos;
                continue;
            }
            const NounPhrase* hyper_np = nullptr;
            for (const auto& b : bindings) {
                if (b.role == SlotRole::Hyper) hyper_np = &nps[b.np_index];
            }
            term_variants(sv, *hyper_np, options.multiword, &hyper_terms);
            for (const auto& b : bindings) {
                if (b.role != SlotRole::Hypo) continue;
                term_variants(sv, nps[b.np_index], options.multiword, &hypo_terms);
                for (const auto& hypo : hypo_terms) {
                    for (const auto& hyper : hyper_terms) {
                        if (hypo == hyper) continue;  // self-pairs dropped at emission
                        records.push_back(ExtractionRecord{hypo, hyper, pat.id,
                                                           sentence.source_id, pos, end});
                    }
                }
            }
            pos = end > pos ? end : pos + 1;
        }
    }
    return records;
}

}  // namespace hearstkit
