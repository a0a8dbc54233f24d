#include "mhom/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mhom/errors.hpp"
#include "mhom/monoid.hpp"
#include "mhom/morse.hpp"

namespace mhom {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Quotient rounded to nearest, so remainders shrink below half the divisor.
Int round_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && abs_int(r) * 2 > abs_int(b)) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

// Sparse working form: row -> (col -> value), plus a column index.
struct SparseMatrix {
    std::vector<std::map<std::size_t, Int>> row;
    std::vector<std::set<std::size_t>> col_rows;

    explicit SparseMatrix(const IntegerMatrix& m) : row(m.rows), col_rows(m.cols) {
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t c = 0; c < m.cols; ++c)
                if (m.at(r, c) != 0) {
                    row[r][c] = m.at(r, c);
                    col_rows[c].insert(r);
                }
    }

    void set(std::size_t r, std::size_t c, Int v) {
        if (v == 0) {
            row[r].erase(c);
            col_rows[c].erase(r);
        } else {
            row[r][c] = std::move(v);
            col_rows[c].insert(r);
        }
    }

    Int get(std::size_t r, std::size_t c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? Int(0) : it->second;
    }

    // row[dst] -= q * row[src], touching only active columns.
    void row_op(std::size_t dst, std::size_t src, const Int& q,
                const std::set<std::size_t>& active_cols) {
        if (q == 0) return;
        for (const auto& [c, v] : std::map<std::size_t, Int>(row[src])) {
            if (!active_cols.count(c)) continue;
            set(dst, c, get(dst, c) - q * v);
        }
    }

    // col[dst] -= q * col[src].
    void col_op(std::size_t dst, std::size_t src, const Int& q,
                const std::set<std::size_t>& active_rows) {
        if (q == 0) return;
        for (std::size_t r : std::set<std::size_t>(col_rows[src])) {
            if (!active_rows.count(r)) continue;
            set(r, dst, get(r, dst) - q * get(r, src));
        }
    }
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
    SparseMatrix w(m);
    std::set<std::size_t> active_rows, active_cols;
    for (std::size_t r = 0; r < m.rows; ++r) active_rows.insert(r);
    for (std::size_t c = 0; c < m.cols; ++c) active_cols.insert(c);

    std::vector<Int> diag;
    for (;;) {
        // Pivot: nonzero entry of minimal absolute value in the active region.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        Int best;
        for (std::size_t r : active_rows) {
            for (const auto& [c, v] : w.row[r]) {
                if (!active_cols.count(c)) continue;
                Int a = abs_int(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = r;
                    pc = c;
                    if (best == 1) break;
                }
            }
            if (found && best == 1) break;
        }
        if (!found) break;

        for (;;) {
            // Clear the pivot column with row operations.
            bool dirty = false;
            for (std::size_t r : std::set<std::size_t>(w.col_rows[pc])) {
                if (r == pr || !active_rows.count(r)) continue;
                Int q = round_div(w.get(r, pc), w.get(pr, pc));
                w.row_op(r, pr, q, active_cols);
                if (w.get(r, pc) != 0) dirty = true;
            }
            // Clear the pivot row with column operations.
            for (const auto& [c, v] : std::map<std::size_t, Int>(w.row[pr])) {
                if (c == pc || !active_cols.count(c)) continue;
                Int q = round_div(v, w.get(pr, pc));
                w.col_op(c, pc, q, active_rows);
                if (w.get(pr, c) != 0) dirty = true;
            }
            if (dirty) {
                // Residues survived: move the smallest entry of the row or
                // column into the pivot and run again.
                Int pivot_abs = abs_int(w.get(pr, pc));
                for (std::size_t r : w.col_rows[pc]) {
                    if (!active_rows.count(r)) continue;
                    if (abs_int(w.get(r, pc)) < pivot_abs && w.get(r, pc) != 0) {
                        pr = r;
                        pivot_abs = abs_int(w.get(r, pc));
                    }
                }
                for (const auto& [c, v] : w.row[pr]) {
                    if (!active_cols.count(c)) continue;
                    if (abs_int(v) < pivot_abs && v != 0) {
                        pc = c;
                        pivot_abs = abs_int(v);
                    }
                }
                continue;
            }
            // Pivot must divide every remaining entry; otherwise fold the
            // offending row in and keep reducing.
            const Int pivot = w.get(pr, pc);
            bool fixed = true;
            for (std::size_t r : active_rows) {
                if (r == pr) continue;
                for (const auto& [c, v] : w.row[r]) {
                    if (!active_cols.count(c)) continue;
                    if (v % pivot != 0) {
                        w.row_op(pr, r, Int(-1), active_cols);
                        fixed = false;
                        break;
                    }
                }
                if (!fixed) break;
            }
            if (fixed) break;
        }

        diag.push_back(abs_int(w.get(pr, pc)));
        active_rows.erase(pr);
        active_cols.erase(pc);
    }

    // The per-pivot divisibility pass already orders the factors; fold any
    // stragglers into a clean chain.
    std::sort(diag.begin(), diag.end());
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] != 0) {
                Int g = boost::multiprecision::gcd(diag[i], diag[i + 1]);
                Int l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
        if (changed) std::sort(diag.begin(), diag.end());
    }

    SNFResult out;
    out.rank = diag.size();
    out.diagonal = std::move(diag);
    return out;
}

namespace {

// A * B == 0, exploiting sparsity of both factors.
bool product_is_zero(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw BoundaryMismatch("boundary shapes do not compose");
    std::vector<std::vector<std::pair<std::size_t, Int>>> acols(a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) acols[j].emplace_back(i, a.at(i, j));
    std::map<std::size_t, Int> acc;
    for (std::size_t k = 0; k < b.cols; ++k) {
        acc.clear();
        for (std::size_t j = 0; j < b.rows; ++j) {
            const Int& v = b.at(j, k);
            if (v == 0) continue;
            for (const auto& [i, av] : acols[j]) acc[i] += av * v;
        }
        for (const auto& [i, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

IntegerMatrix zero_matrix(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }

}  // namespace

HomologyGroup homology_of_complex(const ChainComplexZ& c, std::size_t n) {
    if (n >= c.ranks.size()) return HomologyGroup{};
    const IntegerMatrix dn = (n >= 1 && n < c.boundaries.size())
                                 ? c.boundaries[n]
                                 : zero_matrix(n >= 1 ? c.ranks[n - 1] : 0, c.ranks[n]);
    const IntegerMatrix dn1 = (n + 1 < c.boundaries.size())
                                  ? c.boundaries[n + 1]
                                  : zero_matrix(c.ranks[n],
                                                n + 1 < c.ranks.size() ? c.ranks[n + 1] : 0);
    if (!product_is_zero(dn, dn1))
        throw BoundaryMismatch("consecutive boundaries do not compose to zero at degree " +
                               std::to_string(n));

    SNFResult sn = smith_normal_form(dn);
    SNFResult sn1 = smith_normal_form(dn1);
    HomologyGroup h;
    h.betti = c.ranks[n] - sn.rank - sn1.rank;
    for (const Int& d : sn1.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

ChainComplexZ bar_complex_oracle(const RewritingSystem& rs, std::size_t max_dim) {
    Enumeration en;
    bool finite = false;
    for (std::size_t bound = 2; bound <= 64; bound *= 2) {
        en = enumerate_elements(rs, bound);
        if (en.complete) {
            finite = true;
            break;
        }
    }
    if (!finite) throw NotFinite("finiteness of the monoid could not be certified");

    std::vector<Word> elems;  // non-identity elements
    for (const auto& w : en.elements)
        if (!w.empty()) elems.push_back(w);
    const std::size_t m = elems.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[elems[i]] = i;

    ChainComplexZ z;
    z.ranks.resize(max_dim + 1);
    z.boundaries.resize(max_dim + 1);
    std::size_t rank = 1;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        z.ranks[n] = rank;
        rank *= m;
    }

    // Tuples are indexed little-endian in the element index.
    std::vector<std::size_t> tuple;
    for (std::size_t n = 1; n <= max_dim; ++n) {
        IntegerMatrix d(z.ranks[n - 1], z.ranks[n]);
        tuple.assign(n, 0);
        for (std::size_t col = 0; col < z.ranks[n]; ++col) {
            std::size_t t = col;
            for (std::size_t k = 0; k < n; ++k) {
                tuple[k] = t % m;
                t /= m;
            }
            for (std::size_t i = 0; i <= n; ++i) {
                const int sign = (i % 2 == 0) ? 1 : -1;
                std::size_t row = 0;
                bool degenerate = false;
                if (i == 0) {
                    for (std::size_t k = n - 1; k >= 1; --k) row = row * m + tuple[k];
                } else if (i == n) {
                    for (std::size_t k = n - 1; k-- > 0;) row = row * m + tuple[k];
                } else {
                    Word prod = multiply(elems[tuple[i - 1]], elems[tuple[i]], rs);
                    if (prod.empty()) {
                        degenerate = true;
                    } else {
                        for (std::size_t k = n; k-- > 0;) {
                            if (k == i) continue;
                            std::size_t val = (k == i - 1) ? index.at(prod) : tuple[k];
                            row = row * m + val;
                        }
                    }
                }
                if (!degenerate) d.at(row, col) += sign;
            }
        }
        z.boundaries[n] = std::move(d);
    }
    return z;
}

namespace {

// Row index of basis monomial (w, j) in the Z-expansion of a free module of
// rank `rank` over the enumerated elements.
std::size_t expanded_index(std::size_t elem, std::size_t j, std::size_t elem_count) {
    return j * elem_count + elem;
}

}  // namespace

ExactnessResult verify_exactness(const Resolution& r, std::size_t up_to) {
    if (r.max_dim() < up_to + 1)
        throw Error("InsufficientDepth",
                    "resolution must reach dimension " + std::to_string(up_to + 1));

    Enumeration en;
    bool finite = false;
    for (std::size_t bound = 2; bound <= 64; bound *= 2) {
        en = enumerate_elements(r.rs, bound);
        if (en.complete) {
            finite = true;
            break;
        }
    }
    if (!finite)
        throw NotFinite("exactness checking requires a certified finite monoid");

    const std::vector<Word>& elems = en.elements;
    const std::size_t m = elems.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[elems[i]] = i;

    const bool bi = (r.variant == Coeff::Bi);
    const std::size_t unit = bi ? m * m : m;  // Z-rank of one free generator

    auto pair_index = [&](const Word& l, const Word& rr) {
        return index.at(l) * m + index.at(rr);
    };

    // Expand boundary n to an integer matrix of shape
    // (unit * rank_{n-1}) x (unit * rank_n).
    auto expand = [&](std::size_t n) {
        const auto& mat = r.boundary[n];
        const std::size_t rows = r.basis[n - 1].size();
        const std::size_t cols = r.basis[n].size();
        IntegerMatrix out(unit * rows, unit * cols);
        for (std::size_t k = 0; k < cols; ++k) {
            for (std::size_t e = 0; e < unit; ++e) {
                const std::size_t col = expanded_index(e, k, unit);
                const Word& wl = bi ? elems[e / m] : elems[e];
                const Word& wr = bi ? elems[e % m] : Word{};
                for (std::size_t i = 0; i < rows; ++i) {
                    for (const auto& [mono, c] : mat[i][k].terms) {
                        std::size_t row_e;
                        switch (r.variant) {
                            case Coeff::Left:
                            case Coeff::TrivialZ:
                                row_e = index.at(multiply(wl, mono.left, r.rs));
                                break;
                            case Coeff::Right:
                                row_e = index.at(multiply(mono.right, wl, r.rs));
                                break;
                            case Coeff::Bi:
                            default:
                                row_e = pair_index(multiply(wl, mono.left, r.rs),
                                                   multiply(mono.right, wr, r.rs));
                                break;
                        }
                        out.at(expanded_index(row_e, i, unit), col) += c;
                    }
                }
            }
        }
        return out;
    };

    // Augmentation: one-sided variants map ZM -> Z; the bimodule variant maps
    // ZM (x) ZM -> ZM by multiplication.
    IntegerMatrix aug;
    if (bi) {
        aug = IntegerMatrix(m, unit);
        for (std::size_t e = 0; e < unit; ++e)
            aug.at(index.at(multiply(elems[e / m], elems[e % m], r.rs)), e) += 1;
    } else {
        aug = IntegerMatrix(1, unit);
        for (std::size_t e = 0; e < unit; ++e) aug.at(0, e) = 1;
    }

    std::vector<IntegerMatrix> expanded(up_to + 2);
    for (std::size_t n = 1; n <= up_to + 1; ++n) expanded[n] = expand(n);

    if (!product_is_zero(aug, expanded[1]))
        return {false, 0, "augmentation composed with the first boundary is nonzero"};
    for (std::size_t n = 1; n <= up_to; ++n)
        if (!product_is_zero(expanded[n], expanded[n + 1]))
            return {false, n, "consecutive expanded boundaries do not compose to zero"};

    const std::size_t aug_rank = smith_normal_form(aug).rank;
    std::vector<SNFResult> snf(up_to + 2);
    for (std::size_t n = 1; n <= up_to + 1; ++n) snf[n] = smith_normal_form(expanded[n]);

    for (std::size_t n = 0; n <= up_to; ++n) {
        const std::size_t dim_n = unit * r.basis[n].size();
        const std::size_t rank_out = (n == 0) ? aug_rank : snf[n].rank;
        const std::size_t kernel = dim_n - rank_out;
        const std::size_t image = snf[n + 1].rank;
        if (kernel != image) {
            return {false, n,
                    "kernel rank " + std::to_string(kernel) + " differs from image rank " +
                        std::to_string(image)};
        }
        for (const Int& d : snf[n + 1].diagonal) {
            if (d > 1) {
                return {false, n,
                        "quotient has torsion with invariant factor " + d.convert_to<std::string>()};
            }
        }
    }
    return {true, 0, ""};
}

std::string render_homology_group(const HomologyGroup& g) {
    std::string out;
    for (std::size_t i = 0; i < g.betti; ++i) out += out.empty() ? "Z" : " + Z";
    for (const Int& d : g.torsion)
        out += (out.empty() ? "Z/" : " + Z/") + d.convert_to<std::string>();
    return out.empty() ? "0" : out;
}

}  // namespace mhom
