#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mhom/collapsing.hpp"
#include "mhom/homology.hpp"

namespace mhom {

inline constexpr long long kDefaultFlowFuel = 100'000;

/// A coefficient monomial: a left and a right normal-form word. The trivial
/// variant keeps both at the identity, one-sided variants use one side.
struct CoeffMono {
    Word left;
    Word right;

    friend auto operator<=>(const CoeffMono&, const CoeffMono&) = default;
};

/// Applying `outer` to a term already carrying `inner`: left words compose in
/// application order, right words in the opposite one.
CoeffMono compose(const CoeffMono& outer, const CoeffMono& inner, const RewritingSystem& rs);

/// An element of the coefficient ring: a finite integer combination of
/// monomials, zero coefficients never stored.
struct RingElement {
    std::map<CoeffMono, std::int64_t> terms;

    bool zero() const { return terms.empty(); }
    void add(const CoeffMono& m, std::int64_t c);

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement ring_mul(const RingElement& outer, const RingElement& inner,
                     const RewritingSystem& rs);

/// Sum of integer coefficients: the effect of sending every monoid
/// coefficient to 1.
std::int64_t trivialize_coeff(const RingElement& e);

std::string render_ring_element(const RingElement& e, Coeff variant, const Alphabet& alphabet);

/// A formal combination of cells with ring coefficients. After the flow has
/// run, all keys are essential cells.
using Chain = std::map<BarCell, RingElement>;

/// The gradient flow: rewrites any nondegenerate cell as a combination of
/// essential cells by repeatedly replacing redundant faces through their
/// matched collapsible partners. Memoized per cell; fuel counts cell visits.
class GradientFlow {
public:
    GradientFlow(const RewritingSystem& rs, Coeff variant,
                 long long fuel = kDefaultFlowFuel, Classifier classifier = {});

    const Chain& reduce(const BarCell& cell);
    Chain boundary(const BarCell& essential_cell);

private:
    const RewritingSystem& rs_;
    Coeff variant_;
    long long fuel_;
    Classifier classifier_;
    std::map<BarCell, Chain> memo_;
    std::set<BarCell> in_progress_;
};

/// The finite list of essential cells in one dimension: a single letter
/// followed by entries that are minimally reducible at the whole junction.
std::vector<BarCell> enumerate_essential(const RewritingSystem& rs, std::size_t dim);

Chain morse_boundary(const BarCell& e, Coeff variant, const RewritingSystem& rs,
                     long long fuel = kDefaultFlowFuel);

/// A free resolution over the monoid ring (or bimodule ring, or Z), with
/// per-dimension bases of essential cells and boundary matrices. The
/// augmentation sends the unique 0-cell to 1.
struct Resolution {
    Coeff variant = Coeff::Left;
    RewritingSystem rs;
    std::vector<std::vector<BarCell>> basis;  // dimensions 0..max_dim
    // boundary[n][i][k] = coefficient of basis[n-1][i] in the differential of
    // basis[n][k], for 1 <= n <= max_dim.
    std::vector<std::vector<std::vector<RingElement>>> boundary;

    std::size_t max_dim() const { return basis.empty() ? 0 : basis.size() - 1; }
    std::vector<std::size_t> ranks() const;
};

/// Assemble the Morse complex: bases from enumerate_essential, boundaries
/// from the flow, with a symbolic check that consecutive boundaries compose
/// to zero and the augmentation kills the image of the first one.
Resolution build_resolution(const RewritingSystem& rs, std::size_t max_dim, Coeff variant,
                            long long fuel = kDefaultFlowFuel);

/// Apply Z (x)_{ZM} (-): send every monoid coefficient to 1, yielding the
/// integer complex whose homology is that of the classifying space.
ChainComplexZ trivialize(const Resolution& r);

}  // namespace mhom
