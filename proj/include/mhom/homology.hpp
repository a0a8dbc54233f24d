#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "mhom/rewriting.hpp"

namespace mhom {

using Int = boost::multiprecision::cpp_int;

struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Invariant factors d1 | d2 | ... of the Smith normal form; rank is the
/// number of nonzero factors. Exact arithmetic throughout.
struct SNFResult {
    std::vector<Int> diagonal;
    std::size_t rank = 0;
};

SNFResult smith_normal_form(const IntegerMatrix& m);

/// A (truncated) chain complex of free Z-modules. boundaries[n] maps C_n to
/// C_{n-1} for n >= 1; boundaries[0] is an empty placeholder.
struct ChainComplexZ {
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> boundaries;

    std::size_t top_dim() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_n = ker d_n / im d_{n+1} from Smith normal forms. A boundary beyond the
/// stored truncation is taken to be zero. Throws BoundaryMismatch when the
/// adjacent boundaries do not compose to zero.
HomologyGroup homology_of_complex(const ChainComplexZ& c, std::size_t n);

/// The normalized bar complex of a finite monoid, built by brute force from
/// the multiplication alone: chain groups spanned by tuples of non-identity
/// elements, boundaries by the simplicial face formulas with degenerate faces
/// dropped. Completely independent of the collapsing and flow machinery.
ChainComplexZ bar_complex_oracle(const RewritingSystem& rs, std::size_t max_dim);

struct Resolution;  // morse.hpp

struct ExactnessResult {
    bool exact = true;
    std::size_t fails_at = 0;
    std::string defect;
};

/// For a finite monoid, expand the free resolution to integer matrices via
/// the regular representation and check ker = im at degrees 0..up_to (degree
/// 0 against the augmentation). Requires the resolution to reach up_to + 1.
ExactnessResult verify_exactness(const Resolution& r, std::size_t up_to);

std::string render_homology_group(const HomologyGroup& g);

}  // namespace mhom
