#include "mhom/morse.hpp"

#include <algorithm>

#include "mhom/errors.hpp"
#include "mhom/monoid.hpp"

namespace mhom {

CoeffMono compose(const CoeffMono& outer, const CoeffMono& inner, const RewritingSystem& rs) {
    CoeffMono out;
    out.left = outer.left.empty() ? inner.left
               : inner.left.empty() ? outer.left
                                    : multiply(outer.left, inner.left, rs);
    out.right = outer.right.empty() ? inner.right
                : inner.right.empty() ? outer.right
                                      : multiply(inner.right, outer.right, rs);
    return out;
}

void RingElement::add(const CoeffMono& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

RingElement ring_mul(const RingElement& outer, const RingElement& inner,
                     const RewritingSystem& rs) {
    RingElement out;
    for (const auto& [mo, co] : outer.terms)
        for (const auto& [mi, ci] : inner.terms) out.add(compose(mo, mi, rs), co * ci);
    return out;
}

std::int64_t trivialize_coeff(const RingElement& e) {
    std::int64_t sum = 0;
    for (const auto& [m, c] : e.terms) sum += c;
    return sum;
}

std::string render_ring_element(const RingElement& e, Coeff variant, const Alphabet& alphabet) {
    if (e.terms.empty()) return "0";
    // Highest monomial first, so "a - 1" reads the usual way.
    std::vector<std::pair<CoeffMono, std::int64_t>> terms(e.terms.begin(), e.terms.end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (a.first.left != b.first.left)
            return shortlex_less(b.first.left, a.first.left, alphabet);
        return shortlex_less(b.first.right, a.first.right, alphabet);
    });
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [mono, c] = terms[i];
        if (i == 0) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string word_part;
        switch (variant) {
            case Coeff::TrivialZ: word_part = "1"; break;
            case Coeff::Left: word_part = render_word(mono.left, alphabet); break;
            case Coeff::Right: word_part = render_word(mono.right, alphabet); break;
            case Coeff::Bi:
                word_part = render_word(mono.left, alphabet) + std::string("⊗") +
                            render_word(mono.right, alphabet);
                break;
        }
        const std::int64_t mag = c < 0 ? -c : c;
        const bool identity_mono =
            (variant == Coeff::TrivialZ) || (word_part == "1");
        if (identity_mono) {
            out += std::to_string(mag);
        } else if (mag != 1) {
            out += std::to_string(mag) + " " + word_part;
        } else {
            out += word_part;
        }
    }
    return out;
}

GradientFlow::GradientFlow(const RewritingSystem& rs, Coeff variant, long long fuel,
                           Classifier classifier)
    : rs_(rs), variant_(variant), fuel_(fuel), classifier_(std::move(classifier)) {}

const Chain& GradientFlow::reduce(const BarCell& cell) {
    auto it = memo_.find(cell);
    if (it != memo_.end()) return it->second;
    if (!in_progress_.insert(cell).second)
        throw FuelExhausted("gradient flow revisits a cell: the matching admits a cycle");
    if (fuel_-- <= 0)
        throw FuelExhausted("gradient flow exceeded its cell-visit budget");

    CellClass cls = classifier_ ? classifier_(cell, rs_) : classify_brown(cell, rs_);
    Chain result;
    if (cls.essential()) {
        result[cell].add(CoeffMono{}, 1);
    } else if (cls.redundant()) {
        const BarCell& sigma = cls.partner;
        const std::size_t j = cls.collapse_index;
        const int outer_sign = (j % 2 == 0) ? -1 : 1;  // -(-1)^j
        const BarSimplex sx = sigma.simplex();
        for (std::size_t k = 0; k <= sigma.dim(); ++k) {
            if (k == j) continue;
            BarSimplex f = face(sx, k, rs_);
            if (f.degenerate()) continue;
            CoeffMono absorbed;
            if (k == 0 && (variant_ == Coeff::Left || variant_ == Coeff::Bi))
                absorbed.left = sigma.entries.front();
            if (k == sigma.dim() && (variant_ == Coeff::Right || variant_ == Coeff::Bi))
                absorbed.right = sigma.entries.back();
            const int sign = outer_sign * ((k % 2 == 0) ? 1 : -1);
            const Chain& sub = reduce(BarCell{f.entries});
            for (const auto& [ecell, elt] : sub)
                for (const auto& [mono, c] : elt.terms)
                    result[ecell].add(compose(absorbed, mono, rs_), sign * c);
        }
        for (auto itc = result.begin(); itc != result.end();)
            itc = itc->second.zero() ? result.erase(itc) : std::next(itc);
    }
    // Collapsible cells flow to zero.
    in_progress_.erase(cell);
    return memo_.emplace(cell, std::move(result)).first->second;
}

Chain GradientFlow::boundary(const BarCell& essential_cell) {
    Chain out;
    for (const SignedFace& f : boundary_faces(essential_cell, variant_, rs_)) {
        if (f.simplex.degenerate()) continue;
        CoeffMono fm{f.left_coeff, f.right_coeff};
        const Chain& sub = reduce(BarCell{f.simplex.entries});
        for (const auto& [ecell, elt] : sub)
            for (const auto& [mono, c] : elt.terms)
                out[ecell].add(compose(fm, mono, rs_), f.sign * c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<BarCell> enumerate_essential(const RewritingSystem& rs, std::size_t dim) {
    if (dim == 0) return {BarCell{}};

    std::vector<Word> letters;
    for (const auto& w : enumerate_elements(rs, 1).elements)
        if (w.size() == 1) letters.push_back(w);

    if (dim == 1) {
        std::vector<BarCell> out;
        for (const auto& l : letters) out.push_back(BarCell{{l}});
        return out;
    }

    // Minimal reducibility at the whole junction forces every later entry to
    // be shorter than the longest left-hand side; that bound is what makes
    // this enumeration finite.
    const std::size_t max_lhs = rs.max_lhs_length();
    if (max_lhs < 2) return {};
    std::vector<Word> pool;
    for (const auto& w : enumerate_elements(rs, max_lhs - 1).elements)
        if (!w.empty()) pool.push_back(w);

    std::vector<BarCell> out;
    std::vector<Word> tuple;
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == dim) {
            out.push_back(BarCell{tuple});
            return;
        }
        for (const auto& w : pool) {
            if (junction_reducibility(tuple.back(), w, rs).kind !=
                JunctionResult::Kind::MinimalAtWhole)
                continue;
            tuple.push_back(w);
            self(self, slot + 1);
            tuple.pop_back();
        }
    };
    for (const auto& l : letters) {
        tuple.assign(1, l);
        rec(rec, 1);
    }
    return out;
}

Chain morse_boundary(const BarCell& e, Coeff variant, const RewritingSystem& rs,
                     long long fuel) {
    GradientFlow flow(rs, variant, fuel);
    return flow.boundary(e);
}

std::vector<std::size_t> Resolution::ranks() const {
    std::vector<std::size_t> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(b.size());
    return out;
}

Resolution build_resolution(const RewritingSystem& rs, std::size_t max_dim, Coeff variant,
                            long long fuel) {
    Resolution r;
    r.variant = variant;
    r.rs = rs;
    r.basis.resize(max_dim + 1);
    for (std::size_t n = 0; n <= max_dim; ++n) r.basis[n] = enumerate_essential(rs, n);

    GradientFlow flow(rs, variant, fuel);
    r.boundary.resize(max_dim + 1);
    for (std::size_t n = 1; n <= max_dim; ++n) {
        std::map<BarCell, std::size_t> index;
        for (std::size_t i = 0; i < r.basis[n - 1].size(); ++i) index[r.basis[n - 1][i]] = i;
        r.boundary[n].assign(r.basis[n - 1].size(),
                             std::vector<RingElement>(r.basis[n].size()));
        for (std::size_t k = 0; k < r.basis[n].size(); ++k) {
            Chain chain = flow.boundary(r.basis[n][k]);
            for (auto& [cell, elt] : chain) {
                auto it = index.find(cell);
                if (it == index.end())
                    throw Error("FlowOffBasis",
                                "flow produced a non-essential cell " +
                                    render_cell(cell, rs.alphabet));
                r.boundary[n][it->second][k] = std::move(elt);
            }
        }
    }

    // d o d = 0, symbolically over the coefficient ring.
    for (std::size_t n = 2; n <= max_dim; ++n) {
        for (std::size_t k = 0; k < r.basis[n].size(); ++k) {
            for (std::size_t i = 0; i < (n >= 2 ? r.basis[n - 2].size() : 0); ++i) {
                RingElement acc;
                for (std::size_t j = 0; j < r.basis[n - 1].size(); ++j) {
                    const RingElement& a = r.boundary[n][j][k];
                    const RingElement& b = r.boundary[n - 1][i][j];
                    if (a.zero() || b.zero()) continue;
                    RingElement prod = ring_mul(a, b, rs);
                    for (const auto& [m, c] : prod.terms) acc.add(m, c);
                }
                if (!acc.zero())
                    throw DSquaredNonzero("boundary composite does not vanish at " +
                                          render_cell(r.basis[n][k], rs.alphabet));
            }
        }
    }

    // Augmentation kills the image of the first boundary.
    if (max_dim >= 1) {
        for (std::size_t k = 0; k < r.basis[1].size(); ++k) {
            if (variant == Coeff::Bi) {
                std::map<Word, std::int64_t> image;  // element of ZM
                for (const auto& [m, c] : r.boundary[1][0][k].terms) {
                    Word prod = multiply(m.left, m.right, rs);
                    image[prod] += c;
                    if (image[prod] == 0) image.erase(prod);
                }
                if (!image.empty())
                    throw DSquaredNonzero("augmented composite does not vanish at " +
                                          render_cell(r.basis[1][k], rs.alphabet));
            } else if (trivialize_coeff(r.boundary[1][0][k]) != 0) {
                throw DSquaredNonzero("augmented composite does not vanish at " +
                                      render_cell(r.basis[1][k], rs.alphabet));
            }
        }
    }
    return r;
}

ChainComplexZ trivialize(const Resolution& r) {
    ChainComplexZ z;
    z.ranks = r.ranks();
    z.boundaries.resize(r.basis.size());
    for (std::size_t n = 1; n < r.basis.size(); ++n) {
        IntegerMatrix m(r.basis[n - 1].size(), r.basis[n].size());
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t k = 0; k < m.cols; ++k)
                m.at(i, k) = trivialize_coeff(r.boundary[n][i][k]);
        z.boundaries[n] = std::move(m);
    }
    return z;
}

}  // namespace mhom
