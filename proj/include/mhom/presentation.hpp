#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhom/rewriting.hpp"

namespace mhom {

/// A parsed presentation file: alphabet, oriented equations, optional
/// reduction order and optional generator subset for the Cayley commands.
struct PresentationFile {
    Alphabet alphabet;
    std::vector<std::pair<Word, Word>> equations;
    std::optional<std::vector<std::string>> declared_order;
    std::optional<std::vector<Word>> generator_subset;
};

/// Grammar: lines of `alphabet: s1 s2 ...`, optional `order: s1 < s2 < ...`,
/// `rule: u -> v` (empty v = identity), optional `gens: w1, w2, ...`;
/// `#` starts a comment; unknown keys are rejected.
PresentationFile parse_presentation(const std::string& text);

std::string serialize_presentation(const PresentationFile& p);

RewritingSystem to_rewriting_system(const PresentationFile& p);

/// One comma-separated generator entry: space-separated symbols, or a plain
/// juxtaposition when every character names a symbol.
Word parse_word(const std::string& entry, const Alphabet& alphabet);

}  // namespace mhom
