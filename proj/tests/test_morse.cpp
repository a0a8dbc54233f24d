#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "mhom/homology.hpp"
#include "mhom/monoid.hpp"
#include "mhom/morse.hpp"

using namespace mhom;
using fixtures::w;

namespace {

BarCell cell(const RewritingSystem& rs, std::initializer_list<std::string> entries) {
    BarCell c;
    for (const auto& e : entries) c.entries.push_back(parse_word(e, rs.alphabet));
    return c;
}

RingElement elt(const RewritingSystem& rs, Coeff variant,
                std::initializer_list<std::pair<std::string, std::int64_t>> terms) {
    RingElement e;
    for (const auto& [word, c] : terms) {
        CoeffMono m;
        Word ww = parse_word(word, rs.alphabet);
        if (variant == Coeff::Left || variant == Coeff::Bi) m.left = ww;
        if (variant == Coeff::Right) m.right = ww;
        e.add(m, c);
    }
    return e;
}

std::vector<std::string> cell_names(const std::vector<BarCell>& cells, const Alphabet& a) {
    std::vector<std::string> out;
    for (const auto& c : cells) out.push_back(render_cell(c, a));
    return out;
}

RewritingSystem reversed_system(const RewritingSystem& rs) {
    RewritingSystem rev;
    std::vector<std::string> order(rs.alphabet.symbols.size());
    for (std::size_t i = 0; i < rs.alphabet.symbols.size(); ++i)
        order[rs.alphabet.symbols.size() - 1 - rs.alphabet.rank[i]] = rs.alphabet.symbols[i];
    rev.alphabet = Alphabet::from_symbols(rs.alphabet.symbols, order);
    for (const auto& r : rs.rules) rev.rules.push_back(Rule{reversed(r.lhs), reversed(r.rhs)});
    // Reversal preserves completeness step for step; only the shortlex
    // certificate needs the flipped order.
    rev.completeness = rs.completeness;
    return rev;
}

}  // namespace

TEST_CASE("essential cells of the bicyclic monoid") {
    auto rs = fixtures::bicyclic();
    CHECK(cell_names(enumerate_essential(rs, 0), rs.alphabet) ==
          std::vector<std::string>{"()"});
    CHECK(cell_names(enumerate_essential(rs, 1), rs.alphabet) ==
          std::vector<std::string>{"(a)", "(b)"});
    CHECK(cell_names(enumerate_essential(rs, 2), rs.alphabet) ==
          std::vector<std::string>{"(a,b)"});
    CHECK(enumerate_essential(rs, 3).empty());
}

TEST_CASE("free monoids have no essential cells beyond dimension one") {
    CHECK(enumerate_essential(fixtures::free2(), 2).empty());
    CHECK(enumerate_essential(fixtures::free3(), 2).empty());
}

TEST_CASE("essential cells of the group Z alternate the two letters") {
    auto rs = fixtures::z_group();
    CHECK(cell_names(enumerate_essential(rs, 2), rs.alphabet) ==
          std::vector<std::string>{"(a,b)", "(b,a)"});
    CHECK(cell_names(enumerate_essential(rs, 3), rs.alphabet) ==
          std::vector<std::string>{"(a,b,a)", "(b,a,b)"});
}

TEST_CASE("morse boundaries on the fixtures") {
    auto b = fixtures::bicyclic();

    Chain d1 = morse_boundary(cell(b, {"a"}), Coeff::Left, b);
    REQUIRE(d1.size() == 1);
    CHECK(d1.at(BarCell{}) == elt(b, Coeff::Left, {{"a", 1}, {"1", -1}}));

    Chain d2 = morse_boundary(cell(b, {"a", "b"}), Coeff::Left, b);
    REQUIRE(d2.size() == 2);
    CHECK(d2.at(cell(b, {"b"})) == elt(b, Coeff::Left, {{"a", 1}}));
    CHECK(d2.at(cell(b, {"a"})) == elt(b, Coeff::Left, {{"1", 1}}));

    auto z2 = fixtures::z2();
    Chain z2d2 = morse_boundary(cell(z2, {"a", "a"}), Coeff::Left, z2);
    REQUIRE(z2d2.size() == 1);
    CHECK(z2d2.at(cell(z2, {"a"})) == elt(z2, Coeff::Left, {{"a", 1}, {"1", 1}}));

    Chain z2bi = morse_boundary(cell(z2, {"a", "a"}), Coeff::Bi, z2);
    REQUIRE(z2bi.size() == 1);
    RingElement expected;
    expected.add(CoeffMono{w(z2, "a"), Word{}}, 1);
    expected.add(CoeffMono{Word{}, w(z2, "a")}, 1);
    CHECK(z2bi.at(cell(z2, {"a"})) == expected);
}

TEST_CASE("ring element rendering") {
    auto b = fixtures::bicyclic();
    Chain d1 = morse_boundary(cell(b, {"a"}), Coeff::Left, b);
    CHECK(render_ring_element(d1.at(BarCell{}), Coeff::Left, b.alphabet) == "a - 1");

    auto z2 = fixtures::z2();
    Chain bi = morse_boundary(cell(z2, {"a", "a"}), Coeff::Bi, z2);
    CHECK(render_ring_element(bi.at(cell(z2, {"a"})), Coeff::Bi, z2.alphabet) ==
          "a⊗1 + 1⊗a");
}

TEST_CASE("resolution ranks") {
    auto b = build_resolution(fixtures::bicyclic(), 4, Coeff::Left);
    CHECK(b.ranks() == std::vector<std::size_t>{1, 2, 1, 0, 0});

    auto f2 = build_resolution(fixtures::free2(), 3, Coeff::Bi);
    CHECK(f2.ranks() == std::vector<std::size_t>{1, 2, 0, 0});

    for (auto variant : {Coeff::TrivialZ, Coeff::Left, Coeff::Right, Coeff::Bi}) {
        auto t = build_resolution(fixtures::trivial(), 3, variant);
        CHECK(t.ranks() == std::vector<std::size_t>{1, 0, 0, 0});
    }
}

TEST_CASE("boundary composites vanish over every coefficient ring") {
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::z_group(),
                           fixtures::s3(), fixtures::free1(), fixtures::free2(),
                           fixtures::free3(), fixtures::free_comm()}) {
        for (auto variant : {Coeff::TrivialZ, Coeff::Left, Coeff::Right, Coeff::Bi}) {
            CHECK_NOTHROW((void)build_resolution(rs, 5, variant));
        }
    }
}

TEST_CASE("rank agreement with the essential-cell counts") {
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::s3()}) {
        auto r = build_resolution(rs, 4, Coeff::Left);
        for (std::size_t n = 1; n <= 4; ++n) {
            CHECK(r.boundary[n].size() == enumerate_essential(rs, n - 1).size());
            if (!r.boundary[n].empty())
                CHECK(r.boundary[n][0].size() == enumerate_essential(rs, n).size());
        }
    }
    // One essential 2-cell per rule for single-rule systems.
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::free_comm()})
        CHECK(enumerate_essential(rs, 2).size() == 1);
}

TEST_CASE("trivialization of the small fixtures") {
    auto b = trivialize(build_resolution(fixtures::bicyclic(), 3, Coeff::Left));
    REQUIRE(b.boundaries[2].rows == 2);
    REQUIRE(b.boundaries[2].cols == 1);
    CHECK(b.boundaries[2].at(0, 0) == 1);
    CHECK(b.boundaries[2].at(1, 0) == 1);
    CHECK(b.boundaries[1].at(0, 0) == 0);
    CHECK(b.boundaries[1].at(0, 1) == 0);

    auto z2 = trivialize(build_resolution(fixtures::z2(), 6, Coeff::Left));
    for (std::size_t n = 1; n <= 6; ++n) {
        REQUIRE(z2.boundaries[n].rows == 1);
        CHECK(z2.boundaries[n].at(0, 0) == (n % 2 == 0 ? 2 : 0));
    }

    auto f3 = trivialize(build_resolution(fixtures::free3(), 3, Coeff::Left));
    CHECK(f3.ranks == std::vector<std::size_t>{1, 3, 0, 0});
}

TEST_CASE("H0 of every fixture is Z") {
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::s3(),
                           fixtures::z_group(), fixtures::free2(), fixtures::free_comm(),
                           fixtures::trivial()}) {
        auto z = trivialize(build_resolution(rs, 2, Coeff::Left));
        HomologyGroup h0 = homology_of_complex(z, 0);
        CHECK(h0.betti == 1);
        CHECK(h0.torsion.empty());
    }
}

TEST_CASE("the flow stays within its default fuel through dimension 5") {
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::s3(),
                           fixtures::z_group(), fixtures::free_comm()}) {
        GradientFlow flow(rs, Coeff::Left);
        for (const auto& e : enumerate_essential(rs, 5)) CHECK_NOTHROW((void)flow.boundary(e));
    }
}

TEST_CASE("gradient flow reports fuel exhaustion") {
    auto rs = fixtures::s3();
    GradientFlow flow(rs, Coeff::Left, 2);
    auto cells = enumerate_essential(rs, 4);
    REQUIRE_FALSE(cells.empty());
    CHECK_THROWS_AS(
        [&] {
            for (const auto& e : cells) (void)flow.boundary(e);
        }(),
        FuelExhausted);
}

TEST_CASE("right resolutions match left resolutions of the reversed system") {
    // Entry-reversal is a basis bijection on the mirror-symmetric fixtures.
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::z_group(),
                           fixtures::free2(), fixtures::free_comm()}) {
        auto rev = reversed_system(rs);
        auto right = build_resolution(rs, 3, Coeff::Right);
        auto left = build_resolution(rev, 3, Coeff::Left);

        auto transport = [&](const BarCell& c) {
            BarCell out;
            for (auto it = c.entries.rbegin(); it != c.entries.rend(); ++it)
                out.entries.push_back(reversed(*it));
            return out;
        };

        for (std::size_t n = 0; n <= 3; ++n) {
            REQUIRE(right.basis[n].size() == left.basis[n].size());
            // Map each right basis cell to its reversed twin in the left basis.
            std::vector<std::size_t> to_left(right.basis[n].size());
            for (std::size_t k = 0; k < right.basis[n].size(); ++k) {
                BarCell image = transport(right.basis[n][k]);
                bool found = false;
                for (std::size_t j = 0; j < left.basis[n].size(); ++j) {
                    if (left.basis[n][j] == image) {
                        to_left[k] = j;
                        found = true;
                    }
                }
                REQUIRE(found);
            }
            if (n == 0) continue;
            std::vector<std::size_t> to_left_rows(right.basis[n - 1].size());
            for (std::size_t i = 0; i < right.basis[n - 1].size(); ++i) {
                BarCell image = transport(right.basis[n - 1][i]);
                for (std::size_t j = 0; j < left.basis[n - 1].size(); ++j)
                    if (left.basis[n - 1][j] == image) to_left_rows[i] = j;
            }
            // Reversal sends d_i to d_{n-i}, so the transported differential
            // carries the opposite-simplicial-set sign (-1)^n.
            const std::int64_t sign = (n % 2 == 1) ? -1 : 1;
            for (std::size_t i = 0; i < right.basis[n - 1].size(); ++i) {
                for (std::size_t k = 0; k < right.basis[n].size(); ++k) {
                    RingElement mirrored;
                    for (const auto& [mono, c] : left.boundary[n][to_left_rows[i]][to_left[k]].terms)
                        mirrored.add(CoeffMono{Word{}, reversed(mono.left)}, sign * c);
                    CHECK(right.boundary[n][i][k] == mirrored);
                }
            }
        }
    }

    // Variant-independent consequence that also covers S3: the trivialized
    // boundary matrices of the left and right resolutions coincide.
    for (const auto& rs : {fixtures::bicyclic(), fixtures::z2(), fixtures::s3(),
                           fixtures::z_group(), fixtures::free_comm()}) {
        auto zl = trivialize(build_resolution(rs, 3, Coeff::Left));
        auto zr = trivialize(build_resolution(rs, 3, Coeff::Right));
        REQUIRE(zl.ranks == zr.ranks);
        for (std::size_t n = 1; n <= 3; ++n) CHECK(zl.boundaries[n].data == zr.boundaries[n].data);
    }
}
