#include "mhom/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mhom {

Word multiply(const Word& x, const Word& y, const RewritingSystem& rs) {
    return normal_form(concat(x, y), rs);
}

Enumeration enumerate_elements(const RewritingSystem& rs, std::size_t length_bound) {
    // Irreducible words are closed under prefixes, so extend letter by letter.
    // Generation order (length, then rank-lex) is exactly shortlex.
    std::vector<std::uint32_t> by_rank(rs.alphabet.size());
    std::iota(by_rank.begin(), by_rank.end(), 0u);
    std::sort(by_rank.begin(), by_rank.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rs.alphabet.rank[a] < rs.alphabet.rank[b];
    });

    Enumeration out;
    std::vector<Word> layer{Word{}};
    out.elements.push_back(Word{});
    for (std::size_t len = 1; len <= length_bound + 1; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (std::uint32_t a : by_rank) {
                Word ext = w;
                ext.letters.push_back(a);
                if (is_irreducible(ext, rs)) next.push_back(std::move(ext));
            }
        }
        if (len == length_bound + 1) {
            out.complete = next.empty();
            break;
        }
        for (const auto& w : next) out.elements.push_back(w);
        layer = std::move(next);
        if (layer.empty()) {
            out.complete = true;
            break;
        }
    }
    if (out.complete) {
        // Belt and braces: the set must be closed under right multiplication.
        for (const auto& w : out.elements) {
            for (std::uint32_t a = 0; a < rs.alphabet.size(); ++a) {
                Word p = w;
                p.letters.push_back(a);
                Word nf = normal_form(p, rs);
                if (!std::binary_search(out.elements.begin(), out.elements.end(), nf,
                                        [&](const Word& x, const Word& y) {
                                            return shortlex_less(x, y, rs.alphabet);
                                        })) {
                    out.complete = false;
                    break;
                }
            }
            if (!out.complete) break;
        }
    }
    return out;
}

namespace {

std::vector<Word> normalized_generators(const RewritingSystem& rs, const std::vector<Word>& gens) {
    std::vector<Word> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(normal_form(g, rs));
    return out;
}

}  // namespace

CayleyDigraph right_cayley_graph(const RewritingSystem& rs, const std::vector<Word>& gens,
                                 std::size_t length_bound) {
    Enumeration en = enumerate_elements(rs, length_bound);
    CayleyDigraph g;
    g.two_sided = false;
    g.vertex_words = en.elements;
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < en.elements.size(); ++i) {
        index[en.elements[i]] = i;
        g.vertex_labels.push_back(render_word(en.elements[i], rs.alphabet));
    }
    const auto normalized = normalized_generators(rs, gens);
    for (std::size_t i = 0; i < en.elements.size(); ++i) {
        for (const auto& a : normalized) {
            Word target = multiply(en.elements[i], a, rs);
            auto it = index.find(target);
            if (it == index.end()) {
                g.bounded = true;
                continue;
            }
            g.arcs.push_back({i, it->second, render_word(a, rs.alphabet)});
        }
    }
    if (!en.complete) g.bounded = true;
    return g;
}

CayleyDigraph two_sided_cayley_graph(const RewritingSystem& rs, const std::vector<Word>& gens,
                                     std::size_t length_bound) {
    Enumeration en = enumerate_elements(rs, length_bound);
    CayleyDigraph g;
    g.two_sided = true;
    std::map<std::pair<Word, Word>, std::size_t> index;
    for (const auto& l : en.elements) {
        for (const auto& r : en.elements) {
            index[{l, r}] = g.vertex_pairs.size();
            g.vertex_pairs.emplace_back(l, r);
            g.vertex_labels.push_back("(" + render_word(l, rs.alphabet) + "," +
                                      render_word(r, rs.alphabet) + ")");
        }
    }
    const auto normalized = normalized_generators(rs, gens);
    // Edges are indexed by (m_L, m_R, a); endpoints may leave the bound.
    for (const auto& [ml, mr] : g.vertex_pairs) {
        for (const auto& a : normalized) {
            auto src = index.find({ml, multiply(a, mr, rs)});
            auto dst = index.find({multiply(ml, a, rs), mr});
            if (src == index.end() || dst == index.end()) {
                g.bounded = true;
                continue;
            }
            g.arcs.push_back({src->second, dst->second, render_word(a, rs.alphabet)});
        }
    }
    if (!en.complete) g.bounded = true;
    return g;
}

OrbitPartition weak_orbits(const CayleyDigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& arc : g.arcs) {
        std::size_t a = find(arc.src), b = find(arc.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    OrbitPartition p;
    p.class_of.resize(n);
    std::map<std::size_t, std::size_t> root_to_class;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t root = find(v);
        auto [it, fresh] = root_to_class.emplace(root, p.classes.size());
        if (fresh) p.classes.emplace_back();
        p.classes[it->second].push_back(v);
        p.class_of[v] = it->second;
    }
    return p;
}

F1Certificate f1_certificate(const RewritingSystem& rs, const std::vector<Word>& gens,
                             std::size_t length_bound) {
    Enumeration en = enumerate_elements(rs, length_bound);
    CayleyDigraph g = right_cayley_graph(rs, gens, length_bound);
    OrbitPartition orbits = weak_orbits(g);

    F1Certificate cert;
    cert.enumeration_complete = en.complete;
    if (orbits.classes.size() <= 1) {
        cert.kind = en.complete ? F1Certificate::Kind::Connected : F1Certificate::Kind::Inconclusive;
        return cert;
    }
    // Vertex 0 is the identity (shortlex-least). The witness is the least
    // vertex outside its component.
    cert.kind = F1Certificate::Kind::Disconnected;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (orbits.class_of[v] != orbits.class_of[0]) {
            cert.witness = g.vertex_labels[v];
            break;
        }
    }
    return cert;
}

}  // namespace mhom
