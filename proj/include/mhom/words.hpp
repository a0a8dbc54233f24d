#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mhom {

/// The generating set of a presentation. Symbols are arbitrary identifier
/// strings; the reduction order is the declared order, never the spelling.
struct Alphabet {
    std::vector<std::string> symbols;
    // rank[i] = position of symbol i in the reduction order used by shortlex.
    // Defaults to listing order; an `order:` declaration overrides it.
    std::vector<std::size_t> rank;

    static Alphabet from_symbols(std::vector<std::string> symbols);
    static Alphabet from_symbols(std::vector<std::string> symbols,
                                 const std::vector<std::string>& order);

    std::size_t size() const { return symbols.size(); }
    std::optional<std::uint32_t> index_of(std::string_view symbol) const;
};

/// A word over an alphabet, stored as symbol indices. Empty = identity.
struct Word {
    std::vector<std::uint32_t> letters;

    Word() = default;
    explicit Word(std::vector<std::uint32_t> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend auto operator<=>(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);
Word prefix(const Word& w, std::size_t len);
Word suffix_from(const Word& w, std::size_t start);
Word reversed(const Word& w);

/// Shortlex: length first, then letter-by-letter by the alphabet's rank.
bool shortlex_less(const Word& a, const Word& b, const Alphabet& alphabet);

/// Human rendering: "1" for the empty word; symbols concatenated when every
/// symbol is a single character, space-separated otherwise.
std::string render_word(const Word& w, const Alphabet& alphabet);

/// Grammar rendering: symbols space-separated, empty word rendered as "".
std::string render_word_spaced(const Word& w, const Alphabet& alphabet);

}  // namespace mhom
