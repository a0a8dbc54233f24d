#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mhom/rewriting.hpp"

namespace mhom {

/// Coefficient variant: plain integers, left/right monoid-ring coefficients,
/// or bimodule coefficients on both sides.
enum class Coeff { TrivialZ, Left, Right, Bi };

std::string coeff_name(Coeff v);

/// A simplex of the nerve: a tuple of normal-form words, identity entries
/// allowed. Degenerate iff some entry is the identity.
struct BarSimplex {
    std::vector<Word> entries;

    BarSimplex() = default;
    explicit BarSimplex(std::vector<Word> es) : entries(std::move(es)) {}

    std::size_t dim() const { return entries.size(); }
    bool degenerate() const {
        for (const auto& e : entries)
            if (e.empty()) return true;
        return false;
    }

    friend auto operator<=>(const BarSimplex&, const BarSimplex&) = default;
};

/// A nondegenerate simplex: a tuple of nonempty irreducible words. The empty
/// tuple is the unique 0-cell.
struct BarCell {
    std::vector<Word> entries;

    BarCell() = default;
    explicit BarCell(std::vector<Word> es) : entries(std::move(es)) {}

    std::size_t dim() const { return entries.size(); }
    std::size_t total_length() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.size();
        return n;
    }
    BarSimplex simplex() const { return BarSimplex{entries}; }

    friend auto operator<=>(const BarCell&, const BarCell&) = default;
};

/// One signed face of an equivariant boundary. Coefficients are identity
/// except where d_0 / d_n absorption produces them.
struct SignedFace {
    int sign = 1;
    Word left_coeff;
    BarSimplex simplex;
    Word right_coeff;
};

/// Face map d_i (0 <= i <= dim, dim >= 1); interior faces merge two entries
/// through the rewriting system.
BarSimplex face(const BarSimplex& s, std::size_t i, const RewritingSystem& rs);

/// Degeneracy map s_i: inserts an identity entry after position i.
BarSimplex degeneracy(const BarSimplex& s, std::size_t i);

/// The n+1 signed faces of a nondegenerate cell, with coefficient absorption
/// according to the variant. Degenerate faces are materialised, not dropped.
std::vector<SignedFace> boundary_faces(const BarCell& c, Coeff variant,
                                       const RewritingSystem& rs);

/// All cells of the given dimension with total entry length <= bound, in
/// deterministic (shortlex-lexicographic) order.
std::vector<BarCell> enumerate_cells(const RewritingSystem& rs, std::size_t dim,
                                     std::size_t total_length_bound);

std::string render_cell(const BarCell& c, const Alphabet& alphabet);
std::string render_simplex(const BarSimplex& s, const Alphabet& alphabet);

}  // namespace mhom
