#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "polycert/constructions.hpp"
#include "polycert/simplicial.hpp"

using namespace polycert;
using namespace corpus;

namespace {

SimplicialComplex four_cycle() {
    return {{"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
}

}  // namespace

TEST_CASE("duals of the corpus") {
    auto oct = dual_of_polytope(cube(3));
    CHECK(validate_complex(oct).ok);
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.maximal.size() == 8);
    CHECK(complex_dim(oct) == 2);
    CHECK(is_pure(oct));

    auto cyc = dual_of_polytope(square());
    CHECK(cyc.maximal.size() == 4);
    CHECK(complexes_isomorphic(cyc, four_cycle()));

    auto pd = dual_of_polytope(tri_prism());
    CHECK(pd.vertex_count() == 5);
    CHECK(pd.maximal.size() == 6);
    CHECK(complex_dim(pd) == 2);

    auto s0 = dual_of_polytope(interval());
    CHECK(s0.maximal == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("complex validation") {
    SimplicialComplex bad1{{"a", "a"}, {{0, 1}}};
    CHECK(!validate_complex(bad1).ok);
    SimplicialComplex bad2{{"a", "b"}, {{0, 1}, {0}}};
    CHECK(!validate_complex(bad2).ok);  // not an antichain
    SimplicialComplex bad3{{"a", "b", "c"}, {{0, 1}}};
    CHECK(!validate_complex(bad3).ok);  // unused vertex
}

TEST_CASE("simplicial wedge shapes") {
    auto cyc = dual_of_polytope(square());

    auto w1 = simplicial_k_wedge(cyc, 3, 1);
    CHECK(validate_complex(w1).ok);
    CHECK(w1.vertex_count() == 5);
    CHECK(w1.maximal.size() == 6);
    CHECK(is_pure(w1));

    auto w2 = simplicial_k_wedge(cyc, 3, 2);
    CHECK(validate_complex(w2).ok);
    CHECK(w2.vertex_count() == 6);
    CHECK(w2.maximal.size() == 8);
    CHECK(complex_dim(w2) == 3);
    CHECK(is_pure(w2));
    CHECK(w2.vertex_names[3] == "F3^0");
    CHECK(w2.vertex_names[5] == "F3^2");

    // the wedge of two points is the boundary of the tetrahedron
    auto s0 = dual_of_polytope(interval());
    auto tw = simplicial_k_wedge(s0, 0, 2);
    CHECK(complexes_isomorphic(tw, dual_of_polytope(simplex(3))));

    // the formula with single new vertices in the second join term loses
    // purity for k >= 2
    auto lit2 = simplicial_k_wedge(cyc, 3, 2, true);
    CHECK(!is_pure(lit2));
    auto lit1 = simplicial_k_wedge(cyc, 3, 1, true);
    CHECK(complexes_isomorphic(lit1, w1));

    CHECK_THROWS_AS(simplicial_k_wedge(cyc, 9, 1), polytope_error);
    CHECK_THROWS_AS(simplicial_k_wedge(cyc, 0, 0), polytope_error);
}

TEST_CASE("duality with the polytopal wedge") {
    struct Case {
        CombinatorialPolytope p;
        int facet;
    };
    std::vector<Case> cases = {{interval(), 1},
                               {square(), 3},
                               {polygon(5), 2},
                               {tri_prism(), 0},
                               {cube(3), 0}};
    for (const auto& c : cases)
        for (int k : {1, 2}) {
            auto dk = dual_of_polytope(k_wedge(c.p, c.facet, k).result);
            auto kd = simplicial_k_wedge(dual_of_polytope(c.p), c.facet, k);
            CHECK(complexes_isomorphic(dk, kd));
            CHECK(is_pure(kd));
        }
}

TEST_CASE("wedge vertex vectors") {
    auto cyc = dual_of_polytope(square());
    // the square with lambda (1,0), (0,1), (-1,0), (b,-1) for b = 2
    VertexCharMap lam{2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({2, -1})}};
    CHECK(validate_cones(cyc, lam).ok);

    auto wv = wedge_vertex_vectors(cyc, lam, 3, 3);
    CHECK(wv.ambient_rank == 4);
    CHECK(wv.vectors ==
          std::vector<IntVector>{iv({0, 0, 1, 0}), iv({0, 0, 0, 1}),
                                 iv({0, 0, -1, 0}), iv({-1, -1, 2, -1}),
                                 iv({1, 3, 0, 0}), iv({0, 1, 0, 0})});

    CHECK_THROWS_AS(wedge_vertex_vectors(cyc, lam, 3, 1), polytope_error);

    VertexCharMap dep{2, {iv({1, 0}), iv({1, 0}), iv({-1, 0}), iv({2, -1})}};
    CHECK(!validate_cones(cyc, dep).ok);
    CHECK_THROWS_AS(wedge_vertex_vectors(cyc, dep, 3, 3), polytope_error);
}

TEST_CASE("cone orders match the polytopal wedge orders") {
    auto sq = square();
    CharMap plam{2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({2, -1})}};
    REQUIRE(validate_rchar(sq, plam).ok);
    auto cyc = dual_of_polytope(sq);
    VertexCharMap vlam{2, plam.vectors};

    Int a = 3;
    auto w = k_wedge(sq, 3, 2);
    auto wchar = k_wedge_char(sq, plam, 3, 2, a);
    auto k2 = simplicial_k_wedge(cyc, 3, 2);
    auto wv = wedge_vertex_vectors(cyc, vlam, 3, a);

    // facet i of the wedge corresponds to vertex i of the wedged complex,
    // and the duals agree on the nose
    std::set<std::vector<int>> sa(k2.maximal.begin(), k2.maximal.end());
    std::set<std::vector<int>> sb;
    for (const FacetSet& s : w.result.vertices())
        sb.insert(std::vector<int>(s.begin(), s.end()));
    CHECK(sa == sb);

    for (int v = 0; v < w.result.vertex_count(); ++v) {
        const FacetSet& s = w.result.vertex_facets(v);
        Int d = cone_determinant(wv, std::vector<int>(s.begin(), s.end()));
        Int o = singularity_order(w.result, wchar, v);
        CHECK(abs(d) == o);
    }
}

TEST_CASE("isomorphism search rejects different complexes") {
    auto oct = dual_of_polytope(cube(3));
    auto k2 = simplicial_k_wedge(dual_of_polytope(square()), 3, 2);
    CHECK(oct.vertex_count() == k2.vertex_count());
    CHECK(oct.maximal.size() == k2.maximal.size());
    CHECK(!complexes_isomorphic(oct, k2));

    SimplicialComplex path{{"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(!complexes_isomorphic(four_cycle(), path));
}
