#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhom/errors.hpp"
#include "mhom/words.hpp"

namespace mhom {

inline constexpr long long kDefaultReductionFuel = 1'000'000;
inline constexpr int kDefaultCompletionFuel = 500;

/// An oriented rule lhs -> rhs. The lhs is nonempty; in a certified system the
/// lhs is strictly shortlex-greater than the rhs.
struct Rule {
    Word lhs;
    Word rhs;

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

enum class Completeness { Unverified, CertifiedComplete, FailedConfluence };

struct CriticalPair {
    enum class Overlap { SuffixPrefix, Containment };

    Word source;        // the overlap word
    Word left_result;   // source reduced by the first rule application
    Word right_result;  // source reduced by the second rule application
    Overlap kind = Overlap::SuffixPrefix;

    friend auto operator<=>(const CriticalPair&, const CriticalPair&) = default;
};

/// A string rewriting system. The presentation is the single source of truth:
/// every other module consumes one of these.
struct RewritingSystem {
    Alphabet alphabet;
    std::vector<Rule> rules;
    Completeness completeness = Completeness::Unverified;
    std::optional<CriticalPair> confluence_witness;  // set iff FailedConfluence

    bool certified() const { return completeness == Completeness::CertifiedComplete; }
    std::size_t max_lhs_length() const;
};

/// Reduce w to an irreducible word, applying the leftmost occurrence of the
/// lowest-index rule until none applies. Throws FuelExhausted if the step
/// budget runs out (a sign the system is not noetherian).
Word normal_form(const Word& w, const RewritingSystem& rs,
                 long long fuel = kDefaultReductionFuel);

/// True iff no rule lhs occurs as a factor of w.
bool is_irreducible(const Word& w, const RewritingSystem& rs);

/// Verdict of the junction scan behind Brown's scheme. For irreducible
/// nonempty u, v: reducibility of u·v happens only at occurrences spanning
/// the junction, and v* is the shortest nonempty prefix of v making u·v*
/// reducible.
struct JunctionResult {
    enum class Kind { Irreducible, MinimalAtWhole, ReducibleAtPrefix };

    Kind kind = Kind::Irreducible;
    Word prefix;  // v*, set only for ReducibleAtPrefix
};

JunctionResult junction_reducibility(const Word& u, const Word& v, const RewritingSystem& rs);

/// All critical pairs from proper suffix/prefix overlaps and containments of
/// distinct rule instances, in deterministic order.
std::vector<CriticalPair> critical_pairs(const RewritingSystem& rs);

/// Certify the system: every rule must be shortlex-decreasing (else
/// OrderViolation) and every critical pair must join. Returns the system with
/// the completeness field set, carrying a witness on failure.
RewritingSystem check_complete(RewritingSystem rs);

/// Knuth–Bendix completion under shortlex. Fuel counts rule additions. Rules
/// are inter-reduced after each addition; an already-complete input comes back
/// unchanged up to inter-reduction.
RewritingSystem knuth_bendix(const RewritingSystem& rs, int fuel = kDefaultCompletionFuel);

std::string render_rule(const Rule& r, const Alphabet& alphabet);

}  // namespace mhom
