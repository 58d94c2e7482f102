#include "hearstkit/pattern.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hearstkit {

namespace {

const std::set<std::string> kPennTags = {
    "CC", "CD", "DT",  "EX",  "FW",   "IN",  "JJ",  "JJR", "JJS", "LS",  "MD",  "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP",
    "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP", "WP$", "WRB"};

[[noreturn]] void fail(const std::string& id, size_t offset, const std::string& what) {
    throw std::runtime_error("pattern '" + id + "': offset " + std::to_string(offset) + ": " +
                             what);
}

bool all_upper(const std::string& s) {
    bool saw_alpha = false;
    for (char c : s) {
        if (c == '$') continue;
        if (!std::isupper(static_cast<unsigned char>(c))) return false;
        saw_alpha = true;
    }
    return saw_alpha;
}

bool has_upper(const std::string& s) {
    for (char c : s) {
        if (std::isupper(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

std::vector<std::string> split_bar(const std::string& s, const std::string& id, size_t offset) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            if (cur.empty()) fail(id, offset, "empty alternative in '" + s + "'");
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.empty()) fail(id, offset, "empty alternative in '" + s + "'");
    parts.push_back(cur);
    return parts;
}

PatternElement parse_simple(const std::string& tok, const std::string& id, size_t offset) {
    PatternElement e;
    if (tok.rfind("!(", 0) == 0) {
        if (tok.size() < 4 || tok.back() != ')') fail(id, offset, "malformed '!' group");
        e.kind = PatternElement::Kind::NegatedAlternation;
        e.lemmas = split_bar(tok.substr(2, tok.size() - 3), id, offset);
        for (const auto& l : e.lemmas) {
            if (has_upper(l)) fail(id, offset, "lemmas must be lowercase: '" + l + "'");
        }
        return e;
    }
    if (all_upper(tok)) {
        if (!kPennTags.count(tok)) fail(id, offset, "unknown POS class '" + tok + "'");
        e.kind = PatternElement::Kind::PosClass;
        e.tag = tok;
        return e;
    }
    if (has_upper(tok)) fail(id, offset, "lemmas must be lowercase: '" + tok + "'");
    if (tok.find('|') != std::string::npos) {
        e.kind = PatternElement::Kind::Alternation;
        e.lemmas = split_bar(tok, id, offset);
        return e;
    }
    e.kind = PatternElement::Kind::Literal;
    e.lemmas = {tok};
    return e;
}

}  // namespace

std::string PatternSpec::canonical_text() const {
    std::string out;
    for (const auto& e : elements) {
        if (!out.empty()) out += ' ';
        std::string body;
        switch (e.kind) {
            case PatternElement::Kind::NpSlot:
                body = e.role == SlotRole::Hyper ? "Y" : "X";
                if (e.list) body += "...";
                break;
            case PatternElement::Kind::Literal:
                body = e.lemmas[0];
                break;
            case PatternElement::Kind::Alternation: {
                for (size_t i = 0; i < e.lemmas.size(); ++i) {
                    if (i) body += '|';
                    body += e.lemmas[i];
                }
                break;
            }
            case PatternElement::Kind::NegatedAlternation: {
                body = "!(";
                for (size_t i = 0; i < e.lemmas.size(); ++i) {
                    if (i) body += '|';
                    body += e.lemmas[i];
                }
                body += ')';
                break;
            }
            case PatternElement::Kind::PosClass:
                body = e.tag;
                break;
        }
        out += e.optional ? "(" + body + ")?" : body;
    }
    return out;
}

PatternSpec compile_pattern(const std::string& source, const std::string& id) {
    PatternSpec spec;
    spec.id = id;

    size_t i = 0;
    const size_t n = source.size();
    size_t n_hyper = 0, n_hypo = 0;
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(source[i]))) ++i;
        if (i >= n) break;
        size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(source[i]))) ++i;
        std::string tok = source.substr(start, i - start);

        if (tok == "X" || tok == "Y" || tok == "X...") {
            PatternElement e;
            e.kind = PatternElement::Kind::NpSlot;
            e.role = tok[0] == 'Y' ? SlotRole::Hyper : SlotRole::Hypo;
            e.list = tok == "X...";
            (e.role == SlotRole::Hyper ? n_hyper : n_hypo)++;
            spec.elements.push_back(std::move(e));
            continue;
        }
        if (tok == "Y...") fail(id, start, "list slots are hyponym-only");

        if (tok.size() > 3 && tok.front() == '(' && tok.compare(tok.size() - 2, 2, ")?") == 0) {
            std::string inner = tok.substr(1, tok.size() - 3);
            if (inner == "X" || inner == "Y" || inner == "X...")
                fail(id, start, "NP slots cannot be optional");
            PatternElement e = parse_simple(inner, id, start + 1);
            e.optional = true;
            spec.elements.push_back(std::move(e));
            continue;
        }
        spec.elements.push_back(parse_simple(tok, id, start));
    }

    if (spec.elements.empty()) fail(id, 0, "empty pattern");
    if (n_hyper != 1) fail(id, 0, "pattern needs exactly one Y slot");
    if (n_hypo < 1) fail(id, 0, "pattern needs at least one X slot");
    return spec;
}

PatternSpec compile_pattern(const std::string& source) {
    return compile_pattern(source, source);
}

std::vector<PatternSpec> parse_pattern_file(std::istream& in, const std::string& name) {
    std::vector<PatternSpec> specs;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::ostringstream id;
        id << 'p';
        if (specs.size() + 1 < 10) id << '0';
        id << specs.size() + 1;
        try {
            specs.push_back(compile_pattern(line, id.str()));
        } catch (const std::exception& e) {
            throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return specs;
}

std::vector<PatternSpec> load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    return parse_pattern_file(in, path);
}

}  // namespace hearstkit
