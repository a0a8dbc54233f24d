#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "mhom/presentation.hpp"
#include "mhom/rewriting.hpp"

namespace fixtures {

using namespace mhom;

inline RewritingSystem from_text(const std::string& text) {
    return check_complete(to_rewriting_system(parse_presentation(text)));
}

inline RewritingSystem bicyclic() { return from_text("alphabet: a b\nrule: a b ->\n"); }
inline RewritingSystem z2() { return from_text("alphabet: a\nrule: a a ->\n"); }
inline RewritingSystem z_group() {
    return from_text("alphabet: a b\nrule: a b ->\nrule: b a ->\n");
}
inline RewritingSystem s3() {
    return from_text("alphabet: s t\nrule: s s ->\nrule: t t ->\nrule: t s t -> s t s\n");
}
inline RewritingSystem free1() { return from_text("alphabet: a\n"); }
inline RewritingSystem free2() { return from_text("alphabet: a b\n"); }
inline RewritingSystem free3() { return from_text("alphabet: a b c\n"); }
inline RewritingSystem free_comm() { return from_text("alphabet: a b\nrule: b a -> a b\n"); }
inline RewritingSystem trivial() { return from_text(""); }

inline Word w(const RewritingSystem& rs, const std::string& s) {
    return parse_word(s, rs.alphabet);
}

// All words over the alphabet with length in [0, len], lexicographic by index.
inline std::vector<Word> all_words(const RewritingSystem& rs, std::size_t len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t l = 1; l <= len; ++l) {
        std::vector<Word> next;
        for (const auto& prefix : layer) {
            for (std::uint32_t a = 0; a < rs.alphabet.size(); ++a) {
                Word e = prefix;
                e.letters.push_back(a);
                next.push_back(e);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Independent reduction oracle: the set of irreducible words reachable from w
// by single-step reductions in any order.
inline std::set<Word> irreducible_reducts(const Word& start, const RewritingSystem& rs) {
    std::set<Word> seen;
    std::set<Word> out;
    std::vector<Word> stack{start};
    while (!stack.empty()) {
        Word cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        bool reduced = false;
        for (const auto& rule : rs.rules) {
            if (rule.lhs.size() > cur.size()) continue;
            for (std::size_t pos = 0; pos + rule.lhs.size() <= cur.size(); ++pos) {
                bool hit = true;
                for (std::size_t k = 0; k < rule.lhs.size(); ++k) {
                    if (cur.letters[pos + k] != rule.lhs.letters[k]) {
                        hit = false;
                        break;
                    }
                }
                if (!hit) continue;
                Word next;
                next.letters.assign(cur.letters.begin(), cur.letters.begin() + pos);
                next.letters.insert(next.letters.end(), rule.rhs.letters.begin(),
                                    rule.rhs.letters.end());
                next.letters.insert(next.letters.end(),
                                    cur.letters.begin() + pos + rule.lhs.size(),
                                    cur.letters.end());
                stack.push_back(std::move(next));
                reduced = true;
            }
        }
        if (!reduced) out.insert(cur);
    }
    return out;
}

}  // namespace fixtures
