#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mhom/collapsing.hpp"
#include "mhom/monoid.hpp"

using namespace mhom;
using fixtures::w;

namespace {

BarCell cell(const RewritingSystem& rs, std::initializer_list<std::string> entries) {
    BarCell c;
    for (const auto& e : entries) c.entries.push_back(parse_word(e, rs.alphabet));
    return c;
}

std::vector<RewritingSystem> sample_systems() {
    return {fixtures::bicyclic(), fixtures::z2(),        fixtures::z_group(),
            fixtures::s3(),       fixtures::free_comm(), fixtures::free2()};
}

// Negative control: reports one chosen redundant cell with collapse index 0.
Classifier faulty_at(const BarCell& broken) {
    return [broken](const BarCell& c, const RewritingSystem& rs) {
        CellClass cls = classify_brown(c, rs);
        if (c == broken && cls.redundant()) cls.collapse_index = 0;
        return cls;
    };
}

}  // namespace

TEST_CASE("Brown classification in the bicyclic monoid") {
    auto rs = fixtures::bicyclic();

    auto ba = classify_brown(cell(rs, {"ba"}), rs);
    CHECK(ba.redundant());
    CHECK(ba.partner == cell(rs, {"b", "a"}));
    CHECK(ba.collapse_index == 1);

    auto b_a = classify_brown(cell(rs, {"b", "a"}), rs);
    CHECK(b_a.collapsible());
    CHECK(b_a.partner == cell(rs, {"ba"}));
    CHECK(b_a.collapse_index == 1);

    auto a_ba = classify_brown(cell(rs, {"a", "ba"}), rs);
    CHECK(a_ba.redundant());
    CHECK(a_ba.partner == cell(rs, {"a", "b", "a"}));
    CHECK(a_ba.collapse_index == 2);

    CHECK(classify_brown(cell(rs, {"a", "b"}), rs).essential());
    CHECK(classify_brown(BarCell{}, rs).essential());
}

TEST_CASE("classifier involution on truncations") {
    for (const auto& rs : sample_systems()) {
        for (std::size_t dim = 0; dim <= 3; ++dim) {
            for (const auto& c : enumerate_cells(rs, dim, 7)) {
                CellClass cls = classify_brown(c, rs);
                if (cls.redundant()) {
                    CellClass back = classify_brown(cls.partner, rs);
                    CHECK(back.collapsible());
                    CHECK(back.partner == c);
                    CHECK(back.collapse_index == cls.collapse_index);
                } else if (cls.collapsible()) {
                    CellClass back = classify_brown(cls.partner, rs);
                    CHECK(back.redundant());
                    CHECK(back.partner == c);
                    CHECK(back.collapse_index == cls.collapse_index);
                }
            }
        }
    }
}

TEST_CASE("collapse indices stay strictly inside the face range") {
    for (const auto& rs : sample_systems()) {
        for (std::size_t dim = 1; dim <= 3; ++dim) {
            for (const auto& c : enumerate_cells(rs, dim, 7)) {
                CellClass cls = classify_brown(c, rs);
                if (cls.redundant()) {
                    CHECK(cls.collapse_index >= 1);
                    CHECK(cls.collapse_index <= dim);
                }
            }
        }
    }
}

TEST_CASE("matching digraph of the bicyclic monoid at dimension 1") {
    auto rs = fixtures::bicyclic();
    MatchingDigraph g = build_matching_digraph(rs, 1, {3, 3}, Coeff::TrivialZ);

    auto lower_index = [&](const BarCell& c) {
        for (std::size_t i = 0; i < g.lower.size(); ++i)
            if (g.lower[i].cell == c) return i;
        REQUIRE(false);
        return std::size_t{0};
    };
    auto upper_index = [&](const BarCell& c) {
        for (std::size_t i = 0; i < g.upper.size(); ++i)
            if (g.upper[i].cell == c) return i;
        REQUIRE(false);
        return std::size_t{0};
    };

    std::size_t ba = lower_index(cell(rs, {"ba"}));
    std::size_t b_a = upper_index(cell(rs, {"b", "a"}));
    bool found_up = false;
    for (const auto& arc : g.arcs)
        if (arc.up && arc.lower == ba && arc.upper == b_a) found_up = true;
    CHECK(found_up);
    for (const auto& arc : g.arcs)
        if (!arc.up) CHECK(arc.upper != b_a);  // faces of (b,a) are essential or matched
}

TEST_CASE("no redundant 1-cells over Z/2") {
    auto rs = fixtures::z2();
    MatchingDigraph g = build_matching_digraph(rs, 1, {3, 3}, Coeff::TrivialZ);
    for (const auto& arc : g.arcs) CHECK_FALSE(arc.up);
}

TEST_CASE("empty truncation gives an empty digraph") {
    auto rs = fixtures::bicyclic();
    MatchingDigraph g = build_matching_digraph(rs, 1, {1, 0}, Coeff::TrivialZ);
    CHECK(g.lower.empty());
    CHECK(g.upper.empty());
    CHECK(g.arcs.empty());
}

TEST_CASE("matching digraphs are acyclic on all samples") {
    for (const auto& rs : sample_systems()) {
        for (std::size_t n = 0; n <= 3; ++n)
            CHECK(digraph_acyclic(build_matching_digraph(rs, n, {3, 7}, Coeff::TrivialZ)));
    }
}

TEST_CASE("heights of redundant cells") {
    auto rs = fixtures::bicyclic();
    CHECK(cell_height(cell(rs, {"ba"}), rs) == 0);
    CHECK(cell_height(cell(rs, {"baa"}), rs) == 1);
    CHECK(cell_height(cell(rs, {"aa"}), rs) == 0);
    CHECK(cell_height(cell(rs, {"baaa"}), rs) == 2);
}

TEST_CASE("equivariant lifts keep the verdict and act on the partner") {
    auto rs = fixtures::bicyclic();

    auto lifted = lift_classify({w(rs, "b"), cell(rs, {"ba"}), Word{}, Coeff::Left}, rs);
    CHECK(lifted.verdict == CellClass::Verdict::Redundant);
    CHECK(lifted.partner.left == w(rs, "b"));
    CHECK(lifted.partner.cell == cell(rs, {"b", "a"}));
    CHECK(lifted.collapse_index == 1);

    CHECK(lift_classify({w(rs, "b"), cell(rs, {"a", "b"}), Word{}, Coeff::Left}, rs).verdict ==
          CellClass::Verdict::Essential);

    auto bi = lift_classify({w(rs, "a"), cell(rs, {"ba"}), w(rs, "b"), Coeff::Bi}, rs);
    CHECK(bi.verdict == CellClass::Verdict::Redundant);
    CHECK(bi.partner.left == w(rs, "a"));
    CHECK(bi.partner.cell == cell(rs, {"b", "a"}));
    CHECK(bi.partner.right == w(rs, "b"));
    CHECK(bi.collapse_index == 1);
}

TEST_CASE("lift_classify rejects guard collisions") {
    auto rs = fixtures::bicyclic();
    BarCell broken = cell(rs, {"ba"});
    Classifier faulty = faulty_at(broken);
    CHECK_THROWS_AS(
        (void)lift_classify({w(rs, "b"), broken, Word{}, Coeff::Left}, rs, faulty),
        GuardViolation);
}

TEST_CASE("equivariance of the lift on random coefficient actions") {
    auto rs = fixtures::s3();
    std::mt19937_64 rng(7);
    auto elements = enumerate_elements(rs, 6).elements;
    std::vector<BarCell> redundant;
    for (std::size_t dim = 1; dim <= 3; ++dim)
        for (const auto& c : enumerate_cells(rs, dim, 6))
            if (classify_brown(c, rs).redundant()) redundant.push_back(c);
    REQUIRE_FALSE(redundant.empty());
    for (int trial = 0; trial < 50; ++trial) {
        const BarCell& c = redundant[rng() % redundant.size()];
        Word m = elements[rng() % elements.size()];
        CellClass base = classify_brown(c, rs);
        auto lifted = lift_classify({m, c, Word{}, Coeff::Left}, rs);
        CHECK(lifted.verdict == base.verdict);
        CHECK(lifted.collapse_index == base.collapse_index);
        CHECK(lifted.partner.cell == base.partner);
        CHECK(lifted.partner.left == m);
    }
}

TEST_CASE("verify_scheme passes on the complete fixtures") {
    for (const auto& rs : sample_systems()) {
        for (auto variant : {Coeff::Left, Coeff::Right, Coeff::Bi}) {
            SchemeReport rep = verify_scheme(rs, {3, 6}, variant);
            for (const auto& check : rep.checks) {
                INFO(check.name << ": " << check.detail);
                CHECK(check.passed);
            }
            CHECK(rep.all_passed);
        }
    }
}

TEST_CASE("verify_scheme refutes an injected unguarded matching") {
    auto rs = fixtures::bicyclic();
    Classifier faulty = faulty_at(cell(rs, {"ba"}));
    SchemeReport rep = verify_scheme(rs, {2, 4}, Coeff::Left, faulty);
    CHECK_FALSE(rep.all_passed);
    const CheckResult* guarded = rep.find("guarded");
    REQUIRE(guarded != nullptr);
    CHECK_FALSE(guarded->passed);
    CHECK(guarded->detail.find("(ba)") != std::string::npos);
    // The broken index also breaks the matched-face condition.
    const CheckResult* matching = rep.find("matching");
    REQUIRE(matching != nullptr);
    CHECK_FALSE(matching->passed);
}

TEST_CASE("path lifting projects back to the base path") {
    auto rs = fixtures::bicyclic();
    // (baa) -> (b,aa) -> d0 = (aa) -> (a,a) -> d0/d2 = (a): essential, stop.
    std::vector<PathEdge> edges{{true, 0}, {false, 0}, {true, 0}};
    EquivariantCell mu{w(rs, "b"), cell(rs, {"baa"}), Word{}, Coeff::Left};
    auto lifted = lift_path(mu, edges, rs);
    REQUIRE(lifted.size() == 4);
    CHECK(lifted[0].cell == cell(rs, {"baa"}));
    CHECK(lifted[1].cell == cell(rs, {"b", "aa"}));
    CHECK(lifted[1].left == w(rs, "b"));
    CHECK(lifted[2].cell == cell(rs, {"aa"}));
    CHECK(lifted[2].left == multiply(w(rs, "b"), w(rs, "b"), rs));  // d0 absorbed the first entry
    CHECK(lifted[3].cell == cell(rs, {"a", "a"}));
}

TEST_CASE("matching digraphs for equivariant variants stay acyclic") {
    auto rs = fixtures::z_group();
    for (auto variant : {Coeff::Left, Coeff::Right, Coeff::Bi}) {
        MatchingDigraph g = build_matching_digraph(rs, 1, {2, 5}, variant);
        CHECK(digraph_acyclic(g));
        CHECK_FALSE(g.lower.empty());
    }
}
