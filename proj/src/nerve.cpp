#include "mhom/nerve.hpp"

#include "mhom/errors.hpp"
#include "mhom/monoid.hpp"

namespace mhom {

std::string coeff_name(Coeff v) {
    switch (v) {
        case Coeff::TrivialZ: return "trivial";
        case Coeff::Left: return "left";
        case Coeff::Right: return "right";
        case Coeff::Bi: return "bi";
    }
    return "?";
}

BarSimplex face(const BarSimplex& s, std::size_t i, const RewritingSystem& rs) {
    const std::size_t n = s.dim();
    if (n == 0 || i > n) throw Error("BadIndex", "face index out of range");
    BarSimplex out;
    out.entries.reserve(n - 1);
    if (i == 0) {
        out.entries.assign(s.entries.begin() + 1, s.entries.end());
    } else if (i == n) {
        out.entries.assign(s.entries.begin(), s.entries.end() - 1);
    } else {
        out.entries.assign(s.entries.begin(), s.entries.begin() + i - 1);
        out.entries.push_back(multiply(s.entries[i - 1], s.entries[i], rs));
        out.entries.insert(out.entries.end(), s.entries.begin() + i + 1, s.entries.end());
    }
    return out;
}

BarSimplex degeneracy(const BarSimplex& s, std::size_t i) {
    if (i > s.dim()) throw Error("BadIndex", "degeneracy index out of range");
    BarSimplex out;
    out.entries.reserve(s.dim() + 1);
    out.entries.assign(s.entries.begin(), s.entries.begin() + i);
    out.entries.emplace_back();
    out.entries.insert(out.entries.end(), s.entries.begin() + i, s.entries.end());
    return out;
}

std::vector<SignedFace> boundary_faces(const BarCell& c, Coeff variant,
                                       const RewritingSystem& rs) {
    const std::size_t n = c.dim();
    if (n == 0) throw Error("BadIndex", "the 0-cell has no boundary faces");
    const bool absorb_left = (variant == Coeff::Left || variant == Coeff::Bi);
    const bool absorb_right = (variant == Coeff::Right || variant == Coeff::Bi);

    std::vector<SignedFace> faces;
    faces.reserve(n + 1);
    BarSimplex s = c.simplex();
    for (std::size_t i = 0; i <= n; ++i) {
        SignedFace f;
        f.sign = (i % 2 == 0) ? 1 : -1;
        f.simplex = face(s, i, rs);
        if (i == 0 && absorb_left) f.left_coeff = c.entries.front();
        if (i == n && absorb_right) f.right_coeff = c.entries.back();
        faces.push_back(std::move(f));
    }
    return faces;
}

std::vector<BarCell> enumerate_cells(const RewritingSystem& rs, std::size_t dim,
                                     std::size_t total_length_bound) {
    if (dim == 0) return {BarCell{}};
    if (total_length_bound < dim) return {};

    // Nonempty irreducible words of length <= bound - (dim - 1), shortlex order.
    Enumeration en = enumerate_elements(rs, total_length_bound - (dim - 1));
    std::vector<Word> words;
    for (const auto& w : en.elements)
        if (!w.empty()) words.push_back(w);

    std::vector<BarCell> out;
    std::vector<Word> tuple;
    auto rec = [&](auto&& self, std::size_t slot, std::size_t used) -> void {
        if (slot == dim) {
            out.push_back(BarCell{tuple});
            return;
        }
        const std::size_t remaining = dim - slot - 1;  // each later slot needs >= 1
        for (const auto& w : words) {
            if (used + w.size() + remaining > total_length_bound) continue;
            tuple.push_back(w);
            self(self, slot + 1, used + w.size());
            tuple.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::string render_cell(const BarCell& c, const Alphabet& alphabet) {
    return render_simplex(c.simplex(), alphabet);
}

std::string render_simplex(const BarSimplex& s, const Alphabet& alphabet) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i > 0) out += ",";
        out += render_word(s.entries[i], alphabet);
    }
    out += ")";
    return out;
}

}  // namespace mhom
