#ifndef POLYCERT_TESTS_CORPUS_HPP
#define POLYCERT_TESTS_CORPUS_HPP

// Shared example polytopes and characteristic maps used across the tests.

#include <initializer_list>
#include <string>
#include <vector>

#include "polycert/charmap.hpp"
#include "polycert/polytope.hpp"

namespace corpus {

using polycert::CharMap;
using polycert::CombinatorialPolytope;
using polycert::FacetSet;
using polycert::Int;
using polycert::IntVector;

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline CombinatorialPolytope interval() {
    return CombinatorialPolytope(1, {"F0", "F1"}, {{0}, {1}});
}

// g-gon; edge Fi joins vertex i and vertex i+1 (mod g)
inline CombinatorialPolytope polygon(int g) {
    std::vector<std::string> names;
    std::vector<FacetSet> verts;
    for (int i = 0; i < g; ++i) names.push_back("F" + std::to_string(i));
    for (int i = 0; i < g; ++i) verts.push_back({(i + g - 1) % g, i});
    return CombinatorialPolytope(2, std::move(names), std::move(verts));
}

inline CombinatorialPolytope square() { return polygon(4); }

inline CombinatorialPolytope simplex(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("F" + std::to_string(i));
    std::vector<FacetSet> verts;
    for (int skip = 0; skip <= n; ++skip) {
        FacetSet s;
        for (int i = 0; i <= n; ++i)
            if (i != skip) s.push_back(i);
        verts.push_back(std::move(s));
    }
    return CombinatorialPolytope(n, std::move(names), std::move(verts));
}

// n-cube; facets 2i (positive side) and 2i+1 (negative side) per axis
inline CombinatorialPolytope cube(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < 2 * n; ++i) names.push_back("F" + std::to_string(i));
    std::vector<FacetSet> verts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        FacetSet s;
        for (int i = 0; i < n; ++i)
            s.push_back(2 * i + ((mask >> i) & 1));
        verts.push_back(std::move(s));
    }
    return CombinatorialPolytope(n, std::move(names), std::move(verts));
}

// 3-cube labelled for the blowdown examples: F0 top, F1 bottom, F2 right,
// F3 back, F4 left, Ft front. Opposite pairs: F0/F1, F2/F4, F3/Ft.
inline CombinatorialPolytope cube_bd() {
    return CombinatorialPolytope(3, {"F0", "F1", "F2", "F3", "F4", "Ft"},
                                 {
                                     {0, 2, 5},  // 0 front-top-right
                                     {0, 4, 5},  // 1 front-top-left
                                     {1, 2, 5},  // 2 front-bottom-right
                                     {1, 4, 5},  // 3 front-bottom-left
                                     {0, 2, 3},  // 4 back-top-right
                                     {0, 3, 4},  // 5 back-top-left
                                     {1, 2, 3},  // 6 back-bottom-right
                                     {1, 3, 4},  // 7 back-bottom-left
                                 });
}

// triangular prism; facets: 0 front triangle, 1 back triangle, 2 upper
// quad, 3 right quad, 4 bottom quad. Vertex i (front) pairs with i+3.
inline CombinatorialPolytope tri_prism() {
    return CombinatorialPolytope(3, {"A", "B", "T", "R", "Bo"},
                                 {
                                     {0, 2, 4},  // 0 front lower-left
                                     {0, 2, 3},  // 1 front top
                                     {0, 3, 4},  // 2 front lower-right
                                     {1, 2, 4},  // 3 back lower-left
                                     {1, 2, 3},  // 4 back top
                                     {1, 3, 4},  // 5 back lower-right
                                 });
}

// characteristic maps -------------------------------------------------

// square with (1,0),(2,1),(-3,7),(5,4) on F0..F3
inline CharMap square_char() {
    return CharMap{2, {iv({1, 0}), iv({2, 1}), iv({-3, 7}), iv({5, 4})}};
}

// cube_bd map with the order-3 vertex data; dependent at the
// back-bottom-right vertex since (1,0,1) = (1,1,2) - (0,1,1), so the
// pair fails validation even though every face-level quantity the
// blowdown computation touches is well defined
inline CharMap cube_char_a() {
    return CharMap{3,
                   {iv({0, 2, 1}), iv({1, 1, 2}), iv({0, 1, 1}),
                    iv({1, 0, 1}), iv({1, 0, 0}), iv({1, 3, 3})}};
}

// same six vectors on the unique facet assignment that makes them a valid
// map: (0,1,1)/(1,0,1) move to the opposite pair right/left and (1,0,0)
// to the back
inline CharMap cube_char_a_swapped() {
    return CharMap{3,
                   {iv({0, 2, 1}), iv({1, 1, 2}), iv({0, 1, 1}),
                    iv({1, 0, 0}), iv({1, 0, 1}), iv({1, 3, 3})}};
}

// cube_bd map where the front vector is no rational combination of the
// top/bottom vectors
inline CharMap cube_char_b() {
    return CharMap{3,
                   {iv({2, 1, 4}), iv({6, 3, 5}), iv({3, 1, 7}),
                    iv({1, 2, 6}), iv({4, 1, 3}), iv({2, 3, 5})}};
}

// valid on the cube, degenerate after blowing down the front facet
inline CharMap cube_char_degenerate() {
    return CharMap{3,
                   {iv({1, 0, 0}), iv({1, 0, 0}), iv({2, 3, 5}),
                    iv({1, 3, 2}), iv({4, 1, 0}), iv({1, 0, 1})}};
}

// the printed prism assignment (front, back, upper, right, bottom); this
// one is dependent at the front lower-right vertex and fails validation
inline CharMap prism_char_printed() {
    return CharMap{3,
                   {iv({1, 0, 0}), iv({1, 2, 1}), iv({1, 1, 0}),
                    iv({0, 2, 1}), iv({3, 2, 1})}};
}

// minimal repair of the printed assignment (bottom quad replaced); valid,
// and the standard retraction trace is all ones
inline CharMap prism_char_repaired() {
    return CharMap{3,
                   {iv({1, 0, 0}), iv({1, 2, 1}), iv({1, 1, 0}),
                    iv({0, 2, 1}), iv({0, 0, 1})}};
}

// unimodular map on cube(n): +/- standard vector per axis side
inline CharMap cube_char_unimodular(int n) {
    std::vector<IntVector> vecs;
    for (int i = 0; i < 2 * n; ++i) {
        IntVector e(n, 0);
        e[i / 2] = (i % 2 == 0) ? 1 : -1;
        vecs.push_back(std::move(e));
    }
    return CharMap{n, std::move(vecs)};
}

// unimodular map on simplex(n): standard fan vectors
inline CharMap simplex_char(int n) {
    std::vector<IntVector> vecs;
    vecs.push_back(IntVector(n, -1));
    for (int i = 1; i <= n; ++i) {
        IntVector e(n, 0);
        e[i - 1] = 1;
        vecs.push_back(std::move(e));
    }
    return CharMap{n, std::move(vecs)};
}

inline int vx(const CombinatorialPolytope& p,
              std::initializer_list<const char*> names) {
    FacetSet s;
    for (const char* n : names) s.push_back(*p.facet_index(n));
    auto v = p.find_vertex(s);
    if (!v) throw polycert::polytope_error("corpus: no such vertex");
    return *v;
}

}  // namespace corpus

#endif
