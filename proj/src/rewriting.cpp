#include "mhom/rewriting.hpp"

#include <algorithm>
#include <deque>

namespace mhom {

namespace {

// First position >= from where `pattern` occurs as a factor of `w`, or npos.
std::size_t find_occurrence(const Word& w, const Word& pattern, std::size_t from = 0) {
    if (pattern.empty() || pattern.size() > w.size()) return std::string::npos;
    for (std::size_t i = from; i + pattern.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < pattern.size(); ++k) {
            if (w.letters[i + k] != pattern.letters[k]) {
                hit = false;
                break;
            }
        }
        if (hit) return i;
    }
    return std::string::npos;
}

Word replace_at(const Word& w, std::size_t pos, std::size_t len, const Word& repl) {
    Word out;
    out.letters.reserve(w.size() - len + repl.size());
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
    out.letters.insert(out.letters.end(), repl.letters.begin(), repl.letters.end());
    out.letters.insert(out.letters.end(), w.letters.begin() + pos + len, w.letters.end());
    return out;
}

}  // namespace

std::size_t RewritingSystem::max_lhs_length() const {
    std::size_t m = 0;
    for (const auto& r : rules) m = std::max(m, r.lhs.size());
    return m;
}

Word normal_form(const Word& w, const RewritingSystem& rs, long long fuel) {
    Word cur = w;
    for (;;) {
        bool reduced = false;
        for (const auto& rule : rs.rules) {
            std::size_t pos = find_occurrence(cur, rule.lhs);
            if (pos == std::string::npos) continue;
            if (fuel-- <= 0)
                throw FuelExhausted("reduction step budget exceeded; system may not be noetherian");
            cur = replace_at(cur, pos, rule.lhs.size(), rule.rhs);
            reduced = true;
            break;
        }
        if (!reduced) return cur;
    }
}

bool is_irreducible(const Word& w, const RewritingSystem& rs) {
    for (const auto& rule : rs.rules)
        if (find_occurrence(w, rule.lhs) != std::string::npos) return false;
    return true;
}

JunctionResult junction_reducibility(const Word& u, const Word& v, const RewritingSystem& rs) {
    // u, v irreducible, so any occurrence in u·v spans the junction; scanning
    // prefixes in increasing length means the first hit ends at the last
    // letter of the prefix.
    const std::size_t ulen = u.size();
    Word w = u;
    for (std::size_t p = 1; p <= v.size(); ++p) {
        w.letters.push_back(v.letters[p - 1]);
        for (const auto& rule : rs.rules) {
            const std::size_t llen = rule.lhs.size();
            if (llen <= p || llen > ulen + p) continue;  // must start inside u
            bool hit = true;
            for (std::size_t k = 0; k < llen; ++k) {
                if (w.letters[ulen + p - llen + k] != rule.lhs.letters[k]) {
                    hit = false;
                    break;
                }
            }
            if (hit) {
                JunctionResult jr;
                jr.kind = (p == v.size()) ? JunctionResult::Kind::MinimalAtWhole
                                          : JunctionResult::Kind::ReducibleAtPrefix;
                if (jr.kind == JunctionResult::Kind::ReducibleAtPrefix) jr.prefix = prefix(v, p);
                return jr;
            }
        }
    }
    return JunctionResult{JunctionResult::Kind::Irreducible, Word{}};
}

std::vector<CriticalPair> critical_pairs(const RewritingSystem& rs) {
    std::vector<CriticalPair> pairs;
    const auto& rules = rs.rules;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& li = rules[i].lhs;
            const Word& lj = rules[j].lhs;
            // Proper suffix of li meeting a proper prefix of lj.
            const std::size_t maxk = std::min(li.size(), lj.size()) - 1;
            for (std::size_t k = 1; k <= maxk; ++k) {
                bool match = true;
                for (std::size_t t = 0; t < k; ++t) {
                    if (li.letters[li.size() - k + t] != lj.letters[t]) {
                        match = false;
                        break;
                    }
                }
                if (!match) continue;
                CriticalPair cp;
                cp.kind = CriticalPair::Overlap::SuffixPrefix;
                cp.source = concat(li, suffix_from(lj, k));
                cp.left_result = concat(rules[i].rhs, suffix_from(lj, k));
                cp.right_result = concat(prefix(li, li.size() - k), rules[j].rhs);
                pairs.push_back(std::move(cp));
            }
            // lj contained in li (distinct rule instances only).
            if (i != j && lj.size() <= li.size()) {
                for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
                    bool match = true;
                    for (std::size_t t = 0; t < lj.size(); ++t) {
                        if (li.letters[pos + t] != lj.letters[t]) {
                            match = false;
                            break;
                        }
                    }
                    if (!match) continue;
                    CriticalPair cp;
                    cp.kind = CriticalPair::Overlap::Containment;
                    cp.source = li;
                    cp.left_result = rules[i].rhs;
                    cp.right_result = replace_at(li, pos, lj.size(), rules[j].rhs);
                    pairs.push_back(std::move(cp));
                }
            }
        }
    }
    return pairs;
}

RewritingSystem check_complete(RewritingSystem rs) {
    for (const auto& rule : rs.rules) {
        if (rule.lhs.empty()) throw OrderViolation("rule has empty left-hand side");
        if (!shortlex_less(rule.rhs, rule.lhs, rs.alphabet))
            throw OrderViolation("rule is not shortlex-decreasing: " +
                                 render_rule(rule, rs.alphabet));
    }
    for (const auto& cp : critical_pairs(rs)) {
        if (normal_form(cp.left_result, rs) != normal_form(cp.right_result, rs)) {
            rs.completeness = Completeness::FailedConfluence;
            rs.confluence_witness = cp;
            return rs;
        }
    }
    rs.completeness = Completeness::CertifiedComplete;
    rs.confluence_witness.reset();
    return rs;
}

namespace {

// Orient an equation by shortlex; returns false when the sides are equal.
bool orient(Word a, Word b, const Alphabet& alphabet, Rule& out) {
    if (a == b) return false;
    if (shortlex_less(a, b, alphabet)) std::swap(a, b);
    out.lhs = std::move(a);
    out.rhs = std::move(b);
    return true;
}

}  // namespace

RewritingSystem knuth_bendix(const RewritingSystem& rs, int fuel) {
    RewritingSystem sys;
    sys.alphabet = rs.alphabet;

    std::deque<std::pair<Word, Word>> pending;
    for (const auto& rule : rs.rules) pending.emplace_back(rule.lhs, rule.rhs);

    int additions = 0;
    auto add_rule = [&](Word u, Word v) {
        Word un = normal_form(u, sys);
        Word vn = normal_form(v, sys);
        Rule r;
        if (!orient(std::move(un), std::move(vn), sys.alphabet, r)) return;
        if (++additions > fuel)
            throw FuelExhausted("completion did not terminate within the rule budget");
        // Inter-reduce: rules whose lhs the new rule reduces go back in the
        // queue; surviving right-hand sides are renormalised.
        std::vector<Rule> kept;
        kept.reserve(sys.rules.size() + 1);
        for (auto& old : sys.rules) {
            if (find_occurrence(old.lhs, r.lhs) != std::string::npos) {
                pending.emplace_back(old.lhs, old.rhs);
            } else {
                kept.push_back(std::move(old));
            }
        }
        sys.rules = std::move(kept);
        sys.rules.push_back(std::move(r));
        for (auto& old : sys.rules) old.rhs = normal_form(old.rhs, sys);
    };

    for (;;) {
        while (!pending.empty()) {
            auto [u, v] = pending.front();
            pending.pop_front();
            add_rule(std::move(u), std::move(v));
        }
        bool joined_all = true;
        for (const auto& cp : critical_pairs(sys)) {
            Word a = normal_form(cp.left_result, sys);
            Word b = normal_form(cp.right_result, sys);
            if (a != b) {
                pending.emplace_back(std::move(a), std::move(b));
                joined_all = false;
            }
        }
        if (joined_all) break;
    }
    return check_complete(std::move(sys));
}

std::string render_rule(const Rule& r, const Alphabet& alphabet) {
    return render_word(r.lhs, alphabet) + " -> " + render_word(r.rhs, alphabet);
}

}  // namespace mhom
