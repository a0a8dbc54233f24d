#include "mhom/collapsing.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mhom/errors.hpp"
#include "mhom/monoid.hpp"

namespace mhom {

CellClass classify_brown(const BarCell& c, const RewritingSystem& rs) {
    const std::size_t n = c.dim();
    CellClass out;
    if (n == 0) return out;  // the empty tuple is essential

    const Word& w1 = c.entries.front();
    if (w1.size() > 1) {
        // Split the first entry at its first letter; the merged face d_1 of
        // the partner restores the cell.
        BarCell partner;
        partner.entries.reserve(n + 1);
        partner.entries.push_back(Word{{w1.letters.front()}});
        partner.entries.push_back(suffix_from(w1, 1));
        partner.entries.insert(partner.entries.end(), c.entries.begin() + 1, c.entries.end());
        out.verdict = CellClass::Verdict::Redundant;
        out.partner = std::move(partner);
        out.collapse_index = 1;
        return out;
    }

    for (std::size_t i = 1; i < n; ++i) {
        const Word& u = c.entries[i - 1];
        const Word& v = c.entries[i];
        JunctionResult jr = junction_reducibility(u, v, rs);
        switch (jr.kind) {
            case JunctionResult::Kind::MinimalAtWhole:
                continue;
            case JunctionResult::Kind::Irreducible: {
                // Matched below: the merged face is the redundant partner.
                BarCell partner;
                partner.entries.reserve(n - 1);
                partner.entries.assign(c.entries.begin(), c.entries.begin() + (i - 1));
                partner.entries.push_back(concat(u, v));
                partner.entries.insert(partner.entries.end(), c.entries.begin() + i + 1,
                                       c.entries.end());
                out.verdict = CellClass::Verdict::Collapsible;
                out.partner = std::move(partner);
                out.collapse_index = i;
                return out;
            }
            case JunctionResult::Kind::ReducibleAtPrefix: {
                // Matched above: split v at the shortest reducible prefix.
                BarCell partner;
                partner.entries.reserve(n + 1);
                partner.entries.assign(c.entries.begin(), c.entries.begin() + i);
                partner.entries.push_back(jr.prefix);
                partner.entries.push_back(suffix_from(v, jr.prefix.size()));
                partner.entries.insert(partner.entries.end(), c.entries.begin() + i + 1,
                                       c.entries.end());
                out.verdict = CellClass::Verdict::Redundant;
                out.partner = std::move(partner);
                out.collapse_index = i + 1;
                return out;
            }
        }
    }
    return out;  // essential
}

EquivariantFace equivariant_face(const EquivariantCell& ec, std::size_t i,
                                 const RewritingSystem& rs) {
    const std::size_t n = ec.cell.dim();
    BarSimplex f = face(ec.cell.simplex(), i, rs);

    EquivariantFace out;
    out.sign = (i % 2 == 0) ? 1 : -1;
    out.cell.variant = ec.variant;
    out.cell.left = ec.left;
    out.cell.right = ec.right;
    if (i == 0 && (ec.variant == Coeff::Left || ec.variant == Coeff::Bi))
        out.cell.left = multiply(ec.left, ec.cell.entries.front(), rs);
    if (i == n && (ec.variant == Coeff::Right || ec.variant == Coeff::Bi))
        out.cell.right = multiply(ec.cell.entries.back(), ec.right, rs);
    if (f.degenerate()) {
        out.degenerate = true;
        return out;
    }
    out.cell.cell = BarCell{std::move(f.entries)};
    return out;
}

namespace {

CellClass run_classifier(const Classifier& classifier, const BarCell& c,
                         const RewritingSystem& rs) {
    return classifier ? classifier(c, rs) : classify_brown(c, rs);
}

}  // namespace

EquivariantCellClass lift_classify(const EquivariantCell& ec, const RewritingSystem& rs,
                                   const Classifier& classifier) {
    CellClass base = run_classifier(classifier, ec.cell, rs);
    EquivariantCellClass out;
    out.verdict = base.verdict;
    if (base.essential()) return out;

    // Dimension of the collapsible cell of the matched pair; its faces are
    // indexed 0 .. upper_dim.
    const std::size_t upper_dim = base.redundant() ? ec.cell.dim() + 1 : ec.cell.dim();
    const bool left_guard = (ec.variant == Coeff::Left || ec.variant == Coeff::Bi);
    const bool right_guard = (ec.variant == Coeff::Right || ec.variant == Coeff::Bi);
    if (left_guard && base.collapse_index == 0)
        throw GuardViolation("collapse index 0 collides with the left coefficient face");
    if (right_guard && base.collapse_index == upper_dim)
        throw GuardViolation("collapse index " + std::to_string(base.collapse_index) +
                             " collides with the right coefficient face");

    out.partner = EquivariantCell{ec.left, base.partner, ec.right, ec.variant};
    out.collapse_index = base.collapse_index;
    return out;
}

namespace {

// All coefficient decorations of the base cells fitting the combined length
// bound, deterministic order.
std::vector<EquivariantCell> decorate(const std::vector<BarCell>& cells,
                                      const RewritingSystem& rs, Coeff variant,
                                      std::size_t total_length_bound) {
    std::vector<EquivariantCell> out;
    if (variant == Coeff::TrivialZ) {
        for (const auto& c : cells) out.push_back(EquivariantCell{Word{}, c, Word{}, variant});
        return out;
    }
    const bool has_left = (variant == Coeff::Left || variant == Coeff::Bi);
    const bool has_right = (variant == Coeff::Right || variant == Coeff::Bi);
    std::vector<Word> coeffs =
        enumerate_elements(rs, total_length_bound).elements;  // shortlex order
    for (const auto& c : cells) {
        const std::size_t base_len = c.total_length();
        if (base_len > total_length_bound) continue;
        for (const auto& l : coeffs) {
            if (!has_left && !l.empty()) break;
            if (base_len + l.size() > total_length_bound) continue;
            for (const auto& r : coeffs) {
                if (!has_right && !r.empty()) break;
                if (base_len + l.size() + r.size() > total_length_bound) continue;
                out.push_back(EquivariantCell{l, c, r, variant});
            }
        }
    }
    return out;
}

}  // namespace

MatchingDigraph build_matching_digraph(const RewritingSystem& rs, std::size_t n,
                                       const Truncation& t, Coeff variant,
                                       const Classifier& classifier) {
    MatchingDigraph g;
    g.variant = variant;
    g.dim = n;
    g.lower = decorate(enumerate_cells(rs, n, t.total_length_bound), rs, variant,
                       t.total_length_bound);
    g.upper = decorate(enumerate_cells(rs, n + 1, t.total_length_bound), rs, variant,
                       t.total_length_bound);

    std::map<EquivariantCell, std::size_t> lower_index, upper_index;
    for (std::size_t i = 0; i < g.lower.size(); ++i) lower_index[g.lower[i]] = i;
    for (std::size_t i = 0; i < g.upper.size(); ++i) upper_index[g.upper[i]] = i;

    // Up-arcs: redundant sigma -> kappa(sigma).
    for (std::size_t i = 0; i < g.lower.size(); ++i) {
        CellClass cls = run_classifier(classifier, g.lower[i].cell, rs);
        if (!cls.redundant()) continue;
        EquivariantCell kappa{g.lower[i].left, cls.partner, g.lower[i].right, variant};
        auto it = upper_index.find(kappa);
        if (it == upper_index.end()) {
            g.boundary_truncated = true;
            continue;
        }
        g.arcs.push_back({true, i, it->second, 0});
    }

    // Down-arcs: collapsible tau -> d_j(tau) for redundant faces, excluding
    // the matched face at the matched index.
    for (std::size_t i = 0; i < g.upper.size(); ++i) {
        CellClass cls = run_classifier(classifier, g.upper[i].cell, rs);
        if (!cls.collapsible()) continue;
        for (std::size_t j = 0; j <= n + 1; ++j) {
            EquivariantFace f = equivariant_face(g.upper[i], j, rs);
            if (f.degenerate) continue;
            CellClass fcls = run_classifier(classifier, f.cell.cell, rs);
            if (!fcls.redundant()) continue;
            EquivariantCell kappa{f.cell.left, fcls.partner, f.cell.right, variant};
            if (kappa == g.upper[i] && j == fcls.collapse_index) continue;
            auto it = lower_index.find(f.cell);
            if (it == lower_index.end()) {
                g.boundary_truncated = true;
                continue;
            }
            g.arcs.push_back({false, it->second, i, j});
        }
    }
    return g;
}

bool digraph_acyclic(const MatchingDigraph& g) {
    const std::size_t nl = g.lower.size();
    const std::size_t total = nl + g.upper.size();
    std::vector<std::vector<std::size_t>> adj(total);
    for (const auto& arc : g.arcs) {
        if (arc.up)
            adj[arc.lower].push_back(nl + arc.upper);
        else
            adj[nl + arc.upper].push_back(arc.lower);
    }
    std::vector<int> colour(total, 0);
    // Iterative DFS; 1 = on stack, 2 = done.
    for (std::size_t start = 0; start < total; ++start) {
        if (colour[start] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        colour[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                std::size_t w = adj[v][next++];
                if (colour[w] == 1) return false;
                if (colour[w] == 0) {
                    colour[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                colour[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

long long cell_height(const BarCell& c, const RewritingSystem& rs, HeightCache& cache,
                      long long& fuel, const Classifier& classifier) {
    constexpr long long kInProgress = -1;
    auto it = cache.memo.find(c);
    if (it != cache.memo.end()) {
        if (it->second == kInProgress)
            throw FuelExhausted("descending chain revisits " + std::to_string(c.dim()) +
                                "-cell: descending chains do not terminate");
        return it->second;
    }
    if (fuel-- <= 0)
        throw FuelExhausted("height recursion budget exceeded: descending chains may not terminate");

    CellClass cls = run_classifier(classifier, c, rs);
    if (!cls.redundant()) throw Error("NotRedundant", "height is defined for redundant cells only");

    cache.memo.emplace(c, kInProgress);
    long long best = 0;
    const BarSimplex partner = cls.partner.simplex();
    for (std::size_t j = 0; j <= cls.partner.dim(); ++j) {
        if (j == cls.collapse_index) continue;
        BarSimplex f = face(partner, j, rs);
        if (f.degenerate()) continue;
        BarCell fc{f.entries};
        if (!run_classifier(classifier, fc, rs).redundant()) continue;
        best = std::max(best, 1 + cell_height(fc, rs, cache, fuel, classifier));
    }
    cache.memo[c] = best;
    return best;
}

long long cell_height(const BarCell& c, const RewritingSystem& rs, long long fuel,
                      const Classifier& classifier) {
    HeightCache cache;
    return cell_height(c, rs, cache, fuel, classifier);
}

std::vector<EquivariantCell> lift_path(const EquivariantCell& mu,
                                       const std::vector<PathEdge>& path,
                                       const RewritingSystem& rs,
                                       const Classifier& classifier) {
    std::vector<EquivariantCell> out{mu};
    EquivariantCell cur = mu;
    for (const auto& edge : path) {
        if (edge.up) {
            EquivariantCellClass cls = lift_classify(cur, rs, classifier);
            if (cls.verdict != CellClass::Verdict::Redundant)
                throw Error("BadPath", "up edge from a non-redundant cell");
            cur = cls.partner;
        } else {
            EquivariantFace f = equivariant_face(cur, edge.face_index, rs);
            if (f.degenerate) throw Error("BadPath", "down edge to a degenerate face");
            cur = f.cell;
        }
        out.push_back(cur);
    }
    return out;
}

std::string render_equivariant_cell(const EquivariantCell& ec, const Alphabet& alphabet) {
    std::string out;
    if (ec.variant == Coeff::Left || ec.variant == Coeff::Bi)
        out += render_word(ec.left, alphabet) + ".";
    out += render_cell(ec.cell, alphabet);
    if (ec.variant == Coeff::Right || ec.variant == Coeff::Bi)
        out += "." + render_word(ec.right, alphabet);
    return out;
}

const CheckResult* SchemeReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

struct ClassifiedLayer {
    std::vector<BarCell> cells;
    std::vector<CellClass> classes;
};

}  // namespace

SchemeReport verify_scheme(const RewritingSystem& rs, const Truncation& t, Coeff variant,
                           const Classifier& classifier, std::uint64_t seed) {
    SchemeReport rep;
    auto add_check = [&rep](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, ok ? "" : detail});
        rep.all_passed = rep.all_passed && ok;
    };
    auto fail_detail = [&](const BarCell& c, const std::string& why) {
        return render_cell(c, rs.alphabet) + ": " + why;
    };

    std::vector<ClassifiedLayer> layers(t.max_dim + 2);
    for (std::size_t d = 0; d <= t.max_dim + 1; ++d) {
        layers[d].cells = enumerate_cells(rs, d, t.total_length_bound);
        layers[d].classes.reserve(layers[d].cells.size());
        for (const auto& c : layers[d].cells)
            layers[d].classes.push_back(run_classifier(classifier, c, rs));
    }
    for (std::size_t d = 0; d <= t.max_dim; ++d) {
        for (const auto& cls : layers[d].classes) {
            if (cls.essential()) ++rep.essential;
            if (cls.redundant()) ++rep.redundant;
            if (cls.collapsible()) ++rep.collapsible;
        }
    }

    // --- Matching: a bijection whose partner face restores the cell. ---
    {
        bool ok = true;
        std::string detail;
        for (std::size_t d = 0; d <= t.max_dim && ok; ++d) {
            std::map<BarCell, BarCell> partner_of;  // collapsible partner -> redundant cell
            std::size_t redundant_here = 0;
            for (std::size_t k = 0; k < layers[d].cells.size() && ok; ++k) {
                const auto& c = layers[d].cells[k];
                const auto& cls = layers[d].classes[k];
                if (!cls.redundant()) continue;
                ++redundant_here;
                if (cls.partner.dim() != d + 1) {
                    ok = false;
                    detail = fail_detail(c, "partner dimension is not one higher");
                    break;
                }
                if (cls.collapse_index > d + 1) {
                    ok = false;
                    detail = fail_detail(c, "collapse index out of range");
                    break;
                }
                BarSimplex restored = face(cls.partner.simplex(), cls.collapse_index, rs);
                if (restored != c.simplex()) {
                    ok = false;
                    detail = fail_detail(c, "face of the partner at the collapse index differs");
                    break;
                }
                auto [it, fresh] = partner_of.emplace(cls.partner, c);
                if (!fresh) {
                    ok = false;
                    detail = fail_detail(c, "partner already matched to " +
                                                render_cell(it->second, rs.alphabet));
                    break;
                }
            }
            if (!ok) break;
            // Every collapsible (d+1)-cell in the truncation must be matched.
            std::size_t collapsible_above = 0;
            for (std::size_t k = 0; k < layers[d + 1].cells.size(); ++k) {
                if (!layers[d + 1].classes[k].collapsible()) continue;
                ++collapsible_above;
                if (!partner_of.count(layers[d + 1].cells[k])) {
                    ok = false;
                    detail = fail_detail(layers[d + 1].cells[k],
                                         "collapsible cell not hit by the matching");
                    break;
                }
            }
            if (ok && redundant_here != collapsible_above) {
                ok = false;
                detail = "dimension " + std::to_string(d) + ": " + std::to_string(redundant_here) +
                         " redundant cells vs " + std::to_string(collapsible_above) +
                         " collapsible cells above";
            }
        }
        add_check("matching", ok, detail);
    }

    // --- Involution: Redundant(p, i) <-> Collapsible(c, i). ---
    {
        bool ok = true;
        std::string detail;
        for (std::size_t d = 0; d <= t.max_dim + 1 && ok; ++d) {
            for (std::size_t k = 0; k < layers[d].cells.size(); ++k) {
                const auto& c = layers[d].cells[k];
                const auto& cls = layers[d].classes[k];
                if (cls.redundant()) {
                    CellClass back = run_classifier(classifier, cls.partner, rs);
                    if (!back.collapsible() || back.partner != c ||
                        back.collapse_index != cls.collapse_index) {
                        ok = false;
                        detail = fail_detail(c, "partner does not classify back as its match");
                        break;
                    }
                } else if (cls.collapsible()) {
                    CellClass back = run_classifier(classifier, cls.partner, rs);
                    if (!back.redundant() || back.partner != c ||
                        back.collapse_index != cls.collapse_index) {
                        ok = false;
                        detail = fail_detail(c, "matched face does not classify back as redundant");
                        break;
                    }
                }
            }
        }
        add_check("involution", ok, detail);
    }

    // --- Guardedness: no collapse index 0 or top. ---
    {
        bool ok = true;
        std::string detail;
        for (std::size_t d = 0; d <= t.max_dim && ok; ++d) {
            for (std::size_t k = 0; k < layers[d].cells.size(); ++k) {
                const auto& cls = layers[d].classes[k];
                if (!cls.redundant()) continue;
                if (cls.collapse_index < 1 || cls.collapse_index > d) {
                    ok = false;
                    detail = fail_detail(layers[d].cells[k],
                                         "redundant cell with collapse index " +
                                             std::to_string(cls.collapse_index) +
                                             " outside {1..n}");
                    break;
                }
            }
        }
        add_check("guarded", ok, detail);
    }

    // --- Acyclicity: no directed cycles, all descending chains terminate. ---
    {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 0; n <= t.max_dim && ok; ++n) {
            MatchingDigraph g = build_matching_digraph(rs, n, t, variant, classifier);
            if (!digraph_acyclic(g)) {
                ok = false;
                detail = "matching digraph at dimension " + std::to_string(n) +
                         " contains a directed cycle";
            }
        }
        if (ok) {
            try {
                HeightCache cache;
                long long fuel = kDefaultHeightFuel;
                for (std::size_t d = 0; d <= t.max_dim; ++d)
                    for (std::size_t k = 0; k < layers[d].cells.size(); ++k)
                        if (layers[d].classes[k].redundant())
                            (void)cell_height(layers[d].cells[k], rs, cache, fuel, classifier);
            } catch (const Error& e) {
                ok = false;
                detail = std::string("height computation failed: ") + e.what();
            }
        }
        add_check("acyclicity", ok, detail);
    }

    std::mt19937_64 rng(seed);
    std::vector<Word> coeff_pool = enumerate_elements(rs, 4).elements;
    auto random_coeff = [&](bool active) {
        if (!active || coeff_pool.empty()) return Word{};
        return coeff_pool[rng() % coeff_pool.size()];
    };
    const bool has_left = (variant == Coeff::Left || variant == Coeff::Bi);
    const bool has_right = (variant == Coeff::Right || variant == Coeff::Bi);

    std::vector<std::pair<BarCell, CellClass>> redundant_pool;
    for (std::size_t d = 0; d <= t.max_dim; ++d)
        for (std::size_t k = 0; k < layers[d].cells.size(); ++k)
            if (layers[d].classes[k].redundant())
                redundant_pool.emplace_back(layers[d].cells[k], layers[d].classes[k]);

    // --- A3: the lift commutes with coefficient actions. ---
    {
        bool ok = true;
        std::string detail;
        if (!redundant_pool.empty()) {
            for (int trial = 0; trial < 50 && ok; ++trial) {
                const auto& [c, cls] = redundant_pool[rng() % redundant_pool.size()];
                EquivariantCell ec{random_coeff(has_left), c, random_coeff(has_right), variant};
                try {
                    EquivariantCellClass lifted = lift_classify(ec, rs, classifier);
                    if (lifted.verdict != cls.verdict ||
                        lifted.collapse_index != cls.collapse_index ||
                        lifted.partner.cell != cls.partner || lifted.partner.left != ec.left ||
                        lifted.partner.right != ec.right) {
                        ok = false;
                        detail = render_equivariant_cell(ec, rs.alphabet) +
                                 ": lift disagrees with the coefficient action";
                    }
                } catch (const Error& e) {
                    ok = false;
                    detail = render_equivariant_cell(ec, rs.alphabet) + ": " + e.what();
                }
            }
        }
        add_check("action_compatibility", ok, detail);
    }

    // --- A6: height of m.tau.u equals height of tau, computed through the
    // lifted predecessor relation. ---
    {
        bool ok = true;
        std::string detail;
        std::map<EquivariantCell, long long> eq_memo;
        long long eq_fuel = kDefaultHeightFuel;
        auto eq_height = [&](auto&& self, const EquivariantCell& mu) -> long long {
            constexpr long long kInProgress = -1;
            auto it = eq_memo.find(mu);
            if (it != eq_memo.end()) {
                if (it->second == kInProgress)
                    throw FuelExhausted("lifted descending chain revisits a cell");
                return it->second;
            }
            if (eq_fuel-- <= 0) throw FuelExhausted("equivariant height budget exceeded");
            EquivariantCellClass cls = lift_classify(mu, rs, classifier);
            eq_memo.emplace(mu, kInProgress);
            long long best = 0;
            for (std::size_t j = 0; j <= cls.partner.cell.dim(); ++j) {
                if (j == cls.collapse_index) continue;
                EquivariantFace f = equivariant_face(cls.partner, j, rs);
                if (f.degenerate) continue;
                if (!run_classifier(classifier, f.cell.cell, rs).redundant()) continue;
                best = std::max(best, 1 + self(self, f.cell));
            }
            eq_memo[mu] = best;
            return best;
        };
        if (!redundant_pool.empty()) {
            HeightCache base_cache;
            long long base_fuel = kDefaultHeightFuel;
            for (int trial = 0; trial < 15 && ok; ++trial) {
                const auto& [c, cls] = redundant_pool[rng() % redundant_pool.size()];
                EquivariantCell ec{random_coeff(has_left), c, random_coeff(has_right), variant};
                try {
                    long long hb = cell_height(c, rs, base_cache, base_fuel, classifier);
                    long long he = eq_height(eq_height, ec);
                    if (hb != he) {
                        ok = false;
                        detail = render_equivariant_cell(ec, rs.alphabet) + ": lifted height " +
                                 std::to_string(he) + " differs from base height " +
                                 std::to_string(hb);
                    }
                } catch (const Error& e) {
                    ok = false;
                    detail = render_equivariant_cell(ec, rs.alphabet) + ": " + e.what();
                }
            }
        }
        add_check("height_invariance", ok, detail);
    }

    // --- Path lifting: random base zig-zags lift with matching projections. ---
    {
        bool ok = true;
        std::string detail;
        if (!redundant_pool.empty()) {
            for (int trial = 0; trial < 25 && ok; ++trial) {
                const auto& [start, start_cls] = redundant_pool[rng() % redundant_pool.size()];
                (void)start_cls;
                std::vector<PathEdge> edges;
                std::vector<BarCell> base_vertices{start};
                BarCell cur = start;
                bool at_lower = true;
                for (int steps = 0; steps < 6; ++steps) {
                    CellClass cls = run_classifier(classifier, cur, rs);
                    if (at_lower) {
                        if (!cls.redundant()) break;
                        edges.push_back({true, 0});
                        cur = cls.partner;
                        base_vertices.push_back(cur);
                        at_lower = false;
                    } else {
                        std::vector<std::size_t> candidates;
                        for (std::size_t j = 0; j <= cur.dim(); ++j) {
                            BarSimplex f = face(cur.simplex(), j, rs);
                            if (f.degenerate()) continue;
                            BarCell fc{f.entries};
                            CellClass fcls = run_classifier(classifier, fc, rs);
                            if (!fcls.redundant()) continue;
                            if (fcls.partner == cur && fcls.collapse_index == j) continue;
                            candidates.push_back(j);
                        }
                        if (candidates.empty()) break;
                        std::size_t j = candidates[rng() % candidates.size()];
                        edges.push_back({false, j});
                        cur = BarCell{face(cur.simplex(), j, rs).entries};
                        base_vertices.push_back(cur);
                        at_lower = true;
                    }
                }
                if (edges.empty()) continue;
                EquivariantCell mu{random_coeff(has_left), start, random_coeff(has_right), variant};
                try {
                    std::vector<EquivariantCell> lifted = lift_path(mu, edges, rs, classifier);
                    if (lifted.size() != base_vertices.size()) {
                        ok = false;
                        detail = "lift has the wrong length";
                    } else {
                        for (std::size_t k = 0; k < lifted.size(); ++k) {
                            if (lifted[k].cell != base_vertices[k]) {
                                ok = false;
                                detail = render_equivariant_cell(mu, rs.alphabet) +
                                         ": lifted path projects to the wrong vertex at step " +
                                         std::to_string(k);
                                break;
                            }
                        }
                    }
                } catch (const Error& e) {
                    ok = false;
                    detail = render_equivariant_cell(mu, rs.alphabet) + ": " + e.what();
                }
            }
        }
        add_check("path_lifting", ok, detail);
    }

    return rep;
}

}  // namespace mhom
