#ifndef HEARSTKIT_PATTERN_HPP
#define HEARSTKIT_PATTERN_HPP

#include <string>
#include <vector>

namespace hearstkit {

enum class SlotRole { Hypo, Hyper };

// One matcher element of a compiled pattern. Kept as a tagged struct rather
// than a variant so optionality is a plain flag on any non-slot element.
struct PatternElement {
    enum class Kind { NpSlot, Literal, Alternation, NegatedAlternation, PosClass };

    Kind kind;
    bool optional = false;

    // NpSlot
    SlotRole role = SlotRole::Hypo;
    bool list = false;

    // Literal / Alternation / NegatedAlternation (lemmas), PosClass (tag)
    std::vector<std::string> lemmas;
    std::string tag;
};

// A compiled Hearst pattern: ordered elements with exactly one hypernym
// slot and at least one hyponym slot. List slots (`X...`) bind
// comma/and/or-separated NP sequences and are hyponym-only.
struct PatternSpec {
    std::string id;
    std::vector<PatternElement> elements;

    std::string canonical_text() const;
};

// Compiles one DSL line. Syntax errors report the byte offset of the
// offending token. Grammar, whitespace separated:
//   X  Y        NP slots        X...          list slot (hypo only)
//   lemma       literal         a|b|c         alternation
//   !(a|b)      negated alternation           TAG (Penn, uppercase)  POS class
//   (elem)?     optional wrapper around any non-slot element
PatternSpec compile_pattern(const std::string& source, const std::string& id);

// Convenience for ad-hoc compiles: id defaults to the source text.
PatternSpec compile_pattern(const std::string& source);

// Loads a pattern file: one DSL line per pattern, `#` comment lines and
// blank lines ignored. Ids are assigned positionally: p01, p02, ...
std::vector<PatternSpec> load_pattern_file(const std::string& path);
std::vector<PatternSpec> parse_pattern_file(std::istream& in, const std::string& name);

}  // namespace hearstkit

#endif
