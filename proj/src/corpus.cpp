#include "hearstkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hearstkit {

bool is_noun_tag(const std::string& pos) {
    return pos == "NN" || pos == "NNS" || pos == "NNP" || pos == "NNPS";
}

namespace {

std::string lowercased(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

void for_each_sentence(std::istream& in, const std::string& stream_name,
                       const std::function<void(AnnotatedSentence&&)>& sink) {
    AnnotatedSentence current;
    size_t line_no = 0;
    size_t sentence_no = 0;
    std::string line;

    auto flush = [&] {
        if (current.tokens.empty()) return;
        current.source_id = stream_name + "#" + std::to_string(sentence_no++);
        sink(std::move(current));
        current = AnnotatedSentence{};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        size_t t3 = t2 == std::string::npos ? std::string::npos : line.find('\t', t2 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos || t3 != std::string::npos) {
            throw std::runtime_error(stream_name + ":" + std::to_string(line_no) +
                                     ": expected 3 tab-separated fields");
        }
        AnnotatedToken tok;
        tok.surface = line.substr(0, t1);
        tok.lemma = lowercased(line.substr(t1 + 1, t2 - t1 - 1));
        tok.pos = line.substr(t2 + 1);
        if (tok.lemma.empty()) {
            throw std::runtime_error(stream_name + ":" + std::to_string(line_no) +
                                     ": empty lemma field");
        }
        current.tokens.push_back(std::move(tok));
    }
    flush();
}

std::vector<AnnotatedSentence> parse_corpus(std::istream& in, const std::string& stream_name) {
    std::vector<AnnotatedSentence> out;
    for_each_sentence(in, stream_name,
                      [&](AnnotatedSentence&& s) { out.push_back(std::move(s)); });
    return out;
}

void serialize_corpus(std::ostream& out, const std::vector<AnnotatedSentence>& sentences) {
    for (size_t i = 0; i < sentences.size(); ++i) {
        if (i) out << '\n';
        for (const auto& tok : sentences[i].tokens) {
            out << tok.surface << '\t' << tok.lemma << '\t' << tok.pos << '\n';
        }
    }
}

}  // namespace hearstkit
