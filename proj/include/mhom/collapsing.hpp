#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mhom/nerve.hpp"

namespace mhom {

inline constexpr long long kDefaultHeightFuel = 100'000;

/// Essential/Redundant/Collapsible verdict with matching data. For a
/// redundant n-cell the partner is the matched (n+1)-cell and
/// partner's face at collapse_index gives the cell back; for a collapsible
/// cell the partner is its matched redundant face.
struct CellClass {
    enum class Verdict { Essential, Redundant, Collapsible };

    Verdict verdict = Verdict::Essential;
    BarCell partner;                 // unset for Essential
    std::size_t collapse_index = 0;  // unset for Essential

    bool essential() const { return verdict == Verdict::Essential; }
    bool redundant() const { return verdict == Verdict::Redundant; }
    bool collapsible() const { return verdict == Verdict::Collapsible; }
};

/// A pluggable classifier, so verification can be run against deliberately
/// broken schemes as negative controls.
using Classifier = std::function<CellClass(const BarCell&, const RewritingSystem&)>;

/// Brown's scheme for a complete rewriting system: scan the tuple left to
/// right; a long first entry splits at its first letter; otherwise the first
/// junction that is not minimally-reducible-at-the-whole decides the verdict.
CellClass classify_brown(const BarCell& c, const RewritingSystem& rs);

/// A cell of one of the equivariant nerves: left coefficient, base cell,
/// right coefficient. Left variant keeps right = 1, Right keeps left = 1.
struct EquivariantCell {
    Word left;
    BarCell cell;
    Word right;
    Coeff variant = Coeff::TrivialZ;

    friend auto operator<=>(const EquivariantCell&, const EquivariantCell&) = default;
};

struct EquivariantFace {
    bool degenerate = false;
    int sign = 1;
    EquivariantCell cell;
};

/// Face of an equivariant cell: d_0 folds the first entry into the left
/// coefficient (Left/Bi), d_n folds the last into the right one (Right/Bi).
EquivariantFace equivariant_face(const EquivariantCell& ec, std::size_t i,
                                 const RewritingSystem& rs);

struct EquivariantCellClass {
    CellClass::Verdict verdict = CellClass::Verdict::Essential;
    EquivariantCell partner;
    std::size_t collapse_index = 0;
};

/// Lift of the base classification: same verdict and index, partner carries
/// the same coefficients. Throws GuardViolation if the base index would
/// collide with a coefficient-absorbing face of the requested variant.
EquivariantCellClass lift_classify(const EquivariantCell& ec, const RewritingSystem& rs,
                                   const Classifier& classifier = {});

struct Truncation {
    std::size_t max_dim = 3;
    std::size_t total_length_bound = 6;
};

/// The level-(n, n+1) bipartite digraph: up-arcs from redundant n-cells to
/// their matched collapsible cells, down-arcs from collapsible cells to their
/// redundant faces other than the matched one at its index.
struct MatchingDigraph {
    Coeff variant = Coeff::TrivialZ;
    std::size_t dim = 0;  // lower layer dimension
    std::vector<EquivariantCell> lower;
    std::vector<EquivariantCell> upper;

    struct Arc {
        bool up = false;  // up: lower -> upper, down: upper -> lower
        std::size_t lower = 0;
        std::size_t upper = 0;
        std::size_t face_index = 0;  // meaningful for down-arcs
    };
    std::vector<Arc> arcs;
    bool boundary_truncated = false;
};

MatchingDigraph build_matching_digraph(const RewritingSystem& rs, std::size_t n,
                                       const Truncation& t, Coeff variant,
                                       const Classifier& classifier = {});

/// True iff the digraph has no directed cycle.
bool digraph_acyclic(const MatchingDigraph& g);

/// Maximum length of a descending chain of redundant cells below c. Fuel
/// counts classification visits; exhausting it flags non-terminating descent.
struct HeightCache {
    std::map<BarCell, long long> memo;
};

long long cell_height(const BarCell& c, const RewritingSystem& rs,
                      long long fuel = kDefaultHeightFuel, const Classifier& classifier = {});
long long cell_height(const BarCell& c, const RewritingSystem& rs, HeightCache& cache,
                      long long& fuel, const Classifier& classifier = {});

/// One edge of a zig-zag path in a matching digraph; paths are edge
/// sequences because parallel down-arcs with distinct face indices exist.
struct PathEdge {
    bool up = false;
    std::size_t face_index = 0;  // for down edges
};

/// Lift a base-path (starting at the projection of mu) to the equivariant
/// nerve. Returns the lifted vertex sequence, starting at mu.
std::vector<EquivariantCell> lift_path(const EquivariantCell& mu,
                                       const std::vector<PathEdge>& path,
                                       const RewritingSystem& rs,
                                       const Classifier& classifier = {});

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SchemeReport {
    bool all_passed = true;
    std::vector<CheckResult> checks;
    std::size_t essential = 0;
    std::size_t redundant = 0;
    std::size_t collapsible = 0;

    const CheckResult* find(const std::string& name) const;
};

/// Verify the matching bijection, digraph acyclicity, guardedness, the
/// classifier involution, action compatibility of the lift, height
/// invariance and path lifting, all
/// within the truncation. Failures carry a structured counterexample.
SchemeReport verify_scheme(const RewritingSystem& rs, const Truncation& t, Coeff variant,
                           const Classifier& classifier = {}, std::uint64_t seed = 0x5eed5eedULL);

std::string render_equivariant_cell(const EquivariantCell& ec, const Alphabet& alphabet);

}  // namespace mhom
