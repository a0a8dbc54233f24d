#include "mhom/presentation.hpp"

#include <sstream>

#include "mhom/errors.hpp"

namespace mhom {

namespace {

struct Token {
    std::string text;
    int column = 0;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

Word symbols_to_word(const std::vector<Token>& tokens, std::size_t from, std::size_t to,
                     const Alphabet& alphabet, int line_no) {
    Word w;
    for (std::size_t i = from; i < to; ++i) {
        auto idx = alphabet.index_of(tokens[i].text);
        if (!idx) throw UndeclaredSymbol(line_no, tokens[i].column, tokens[i].text);
        w.letters.push_back(*idx);
    }
    return w;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    bool have_alphabet = false;
    std::vector<Token> alphabet_tokens;
    int alphabet_line = 0;
    std::optional<std::vector<std::string>> order;
    std::vector<std::pair<std::vector<Token>, int>> rule_lines;
    std::optional<std::pair<std::vector<Token>, int>> gens_line;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& key = tokens.front().text;
        if (key == "alphabet:") {
            if (have_alphabet)
                throw ParseError(line_no, tokens.front().column, "duplicate alphabet declaration");
            have_alphabet = true;
            alphabet_tokens = tokens;
            alphabet_line = line_no;
        } else if (key == "order:") {
            if (order)
                throw ParseError(line_no, tokens.front().column, "duplicate order declaration");
            std::vector<std::string> syms;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (i % 2 == 0) {
                    if (tokens[i].text != "<")
                        throw ParseError(line_no, tokens[i].column, "expected '<' between symbols");
                } else {
                    syms.push_back(tokens[i].text);
                }
            }
            if (syms.empty() || tokens.size() % 2 != 0)
                throw ParseError(line_no, tokens.front().column,
                                 "order must list symbols separated by '<'");
            order = std::move(syms);
        } else if (key == "rule:") {
            rule_lines.emplace_back(tokens, line_no);
        } else if (key == "gens:") {
            if (gens_line)
                throw ParseError(line_no, tokens.front().column, "duplicate gens declaration");
            gens_line = {tokens, line_no};
        } else {
            throw ParseError(line_no, tokens.front().column, "unknown key '" + key + "'");
        }
    }

    PresentationFile p;
    if (!have_alphabet) {
        if (!rule_lines.empty()) {
            const auto& [tokens, ln] = rule_lines.front();
            throw UndeclaredSymbol(ln, tokens.size() > 1 ? tokens[1].column : tokens[0].column,
                                   tokens.size() > 1 ? tokens[1].text : "");
        }
        p.alphabet = Alphabet::from_symbols({});
        return p;
    }

    std::vector<std::string> symbols;
    for (std::size_t i = 1; i < alphabet_tokens.size(); ++i)
        symbols.push_back(alphabet_tokens[i].text);
    try {
        p.alphabet = order ? Alphabet::from_symbols(symbols, *order)
                           : Alphabet::from_symbols(symbols);
    } catch (const Error& e) {
        throw ParseError(alphabet_line, 1, e.what());
    }
    p.declared_order = order;

    for (const auto& [tokens, ln] : rule_lines) {
        std::size_t arrow = 0;
        for (std::size_t i = 1; i < tokens.size(); ++i)
            if (tokens[i].text == "->") {
                arrow = i;
                break;
            }
        if (arrow == 0)
            throw ParseError(ln, tokens.front().column, "rule is missing '->'");
        Word lhs = symbols_to_word(tokens, 1, arrow, p.alphabet, ln);
        Word rhs = symbols_to_word(tokens, arrow + 1, tokens.size(), p.alphabet, ln);
        if (lhs.empty())
            throw ParseError(ln, tokens.front().column, "rule has an empty left-hand side");
        if (lhs == rhs)
            throw ParseError(ln, tokens.front().column, "rule relates a word to itself");
        p.equations.emplace_back(std::move(lhs), std::move(rhs));
    }

    if (gens_line) {
        const auto& tokens = gens_line->first;
        const int ln = gens_line->second;
        std::vector<Word> gens;
        Word cur;
        bool any = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::string t = tokens[i].text;
            bool ends_entry = false;
            if (!t.empty() && t.back() == ',') {
                t.pop_back();
                ends_entry = true;
            }
            if (!t.empty()) {
                auto idx = p.alphabet.index_of(t);
                if (!idx) throw UndeclaredSymbol(ln, tokens[i].column, t);
                cur.letters.push_back(*idx);
                any = true;
            }
            if (ends_entry) {
                gens.push_back(cur);
                cur = Word{};
                any = false;
            }
        }
        if (any || !cur.empty()) gens.push_back(cur);
        p.generator_subset = std::move(gens);
    }
    return p;
}

std::string serialize_presentation(const PresentationFile& p) {
    std::string out = "alphabet:";
    for (const auto& s : p.alphabet.symbols) out += " " + s;
    out += "\n";
    if (p.declared_order) {
        out += "order:";
        for (std::size_t i = 0; i < p.declared_order->size(); ++i)
            out += (i == 0 ? " " : " < ") + (*p.declared_order)[i];
        out += "\n";
    }
    for (const auto& [lhs, rhs] : p.equations) {
        out += "rule: " + render_word_spaced(lhs, p.alphabet) + " ->";
        std::string rhs_str = render_word_spaced(rhs, p.alphabet);
        if (!rhs_str.empty()) out += " " + rhs_str;
        out += "\n";
    }
    if (p.generator_subset) {
        out += "gens:";
        for (std::size_t i = 0; i < p.generator_subset->size(); ++i)
            out += (i == 0 ? " " : ", ") + render_word_spaced((*p.generator_subset)[i], p.alphabet);
        out += "\n";
    }
    return out;
}

RewritingSystem to_rewriting_system(const PresentationFile& p) {
    RewritingSystem rs;
    rs.alphabet = p.alphabet;
    for (const auto& [lhs, rhs] : p.equations) rs.rules.push_back(Rule{lhs, rhs});
    return rs;
}

Word parse_word(const std::string& entry, const Alphabet& alphabet) {
    // "1" names the identity; otherwise space-separated symbols first, then
    // letter-by-letter.
    {
        std::istringstream probe(entry);
        std::string tok;
        if (!(probe >> tok) || (tok == "1" && !(probe >> tok))) return Word{};
    }
    std::istringstream in(entry);
    std::vector<std::string> parts;
    std::string t;
    while (in >> t) parts.push_back(t);
    Word w;
    bool all_symbols = !parts.empty();
    for (const auto& part : parts) {
        auto idx = alphabet.index_of(part);
        if (!idx) {
            all_symbols = false;
            break;
        }
        w.letters.push_back(*idx);
    }
    if (all_symbols || parts.empty()) return w;

    w.letters.clear();
    std::string joined;
    for (const auto& part : parts) joined += part;
    for (char c : joined) {
        auto idx = alphabet.index_of(std::string(1, c));
        if (!idx) throw Error("UndeclaredSymbol", "undeclared symbol '" + std::string(1, c) +
                                                       "' in word '" + entry + "'");
        w.letters.push_back(*idx);
    }
    return w;
}

}  // namespace mhom
