#include "mhom/words.hpp"

#include <algorithm>
#include <set>

#include "mhom/errors.hpp"

namespace mhom {

Alphabet Alphabet::from_symbols(std::vector<std::string> symbols) {
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (s.empty()) throw Error("BadAlphabet", "empty symbol name");
        if (!seen.insert(s).second) throw Error("BadAlphabet", "duplicate symbol '" + s + "'");
    }
    Alphabet a;
    a.rank.resize(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) a.rank[i] = i;
    a.symbols = std::move(symbols);
    return a;
}

Alphabet Alphabet::from_symbols(std::vector<std::string> symbols,
                                const std::vector<std::string>& order) {
    Alphabet a = from_symbols(std::move(symbols));
    if (order.size() != a.symbols.size())
        throw Error("BadAlphabet", "order declaration must list every symbol exactly once");
    std::vector<bool> used(a.symbols.size(), false);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        auto idx = a.index_of(order[pos]);
        if (!idx) throw Error("BadAlphabet", "order lists unknown symbol '" + order[pos] + "'");
        if (used[*idx]) throw Error("BadAlphabet", "order repeats symbol '" + order[pos] + "'");
        used[*idx] = true;
        a.rank[*idx] = pos;
    }
    return a;
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == symbol) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word prefix(const Word& w, std::size_t len) {
    return Word{std::vector<std::uint32_t>(w.letters.begin(), w.letters.begin() + len)};
}

Word suffix_from(const Word& w, std::size_t start) {
    return Word{std::vector<std::uint32_t>(w.letters.begin() + start, w.letters.end())};
}

Word reversed(const Word& w) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

bool shortlex_less(const Word& a, const Word& b, const Alphabet& alphabet) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t ra = alphabet.rank[a.letters[i]];
        std::size_t rb = alphabet.rank[b.letters[i]];
        if (ra != rb) return ra < rb;
    }
    return false;
}

namespace {

bool single_char_symbols(const Alphabet& alphabet) {
    for (const auto& s : alphabet.symbols)
        if (s.size() != 1) return false;
    return true;
}

}  // namespace

std::string render_word(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string out;
    const bool tight = single_char_symbols(alphabet);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !tight) out += ' ';
        out += alphabet.symbols[w.letters[i]];
    }
    return out;
}

std::string render_word_spaced(const Word& w, const Alphabet& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += alphabet.symbols[w.letters[i]];
    }
    return out;
}

}  // namespace mhom
