#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mhom/rewriting.hpp"

namespace mhom {

/// Elements are normal-form words throughout; there is no separate element
/// type beyond Word, keeping reports human-readable.
Word multiply(const Word& x, const Word& y, const RewritingSystem& rs);

struct Enumeration {
    std::vector<Word> elements;  // all irreducible words of length <= bound, shortlex order
    bool complete = false;       // Yes/Unknown finiteness flag
};

Enumeration enumerate_elements(const RewritingSystem& rs, std::size_t length_bound);

struct CayleyArc {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::string label;
};

struct CayleyDigraph {
    bool two_sided = false;
    bool bounded = false;  // true when the enumeration bound dropped arcs
    std::vector<std::string> vertex_labels;
    std::vector<Word> vertex_words;                       // right graph
    std::vector<std::pair<Word, Word>> vertex_pairs;      // two-sided graph
    std::vector<CayleyArc> arcs;

    std::size_t vertex_count() const {
        return two_sided ? vertex_pairs.size() : vertex_words.size();
    }
};

/// Right Cayley digraph on the bounded element set: arcs m -> m·a for a in
/// the generator subset. Generators are arbitrary words, reduced to normal
/// form; loops are kept.
CayleyDigraph right_cayley_graph(const RewritingSystem& rs, const std::vector<Word>& gens,
                                 std::size_t length_bound);

/// Two-sided Cayley digraph: arc (m_L, a·m_R) -> (m_L·a, m_R) labelled a, for
/// every pair of bounded elements and every generator.
CayleyDigraph two_sided_cayley_graph(const RewritingSystem& rs, const std::vector<Word>& gens,
                                     std::size_t length_bound);

struct OrbitPartition {
    std::vector<std::vector<std::size_t>> classes;  // disjoint vertex sets
    std::vector<std::size_t> class_of;              // vertex -> class index
};

/// Undirected connected components.
OrbitPartition weak_orbits(const CayleyDigraph& g);

struct F1Certificate {
    enum class Kind { Connected, Disconnected, Inconclusive };

    Kind kind = Kind::Inconclusive;
    std::string witness;              // a vertex not reachable from the identity
    bool enumeration_complete = false;
};

/// Connectivity certificate for the bounded right Cayley graph. Connected is
/// only issued when the enumeration is complete; a Disconnected verdict on an
/// incomplete enumeration is bounded evidence, flagged as such.
F1Certificate f1_certificate(const RewritingSystem& rs, const std::vector<Word>& gens,
                             std::size_t length_bound);

}  // namespace mhom
