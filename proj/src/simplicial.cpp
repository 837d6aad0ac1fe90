#include "polycert/simplicial.hpp"

#include <algorithm>
#include <set>

namespace polycert {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// keep only inclusion-maximal members, deduped, deterministic order
std::vector<std::vector<int>> maximalize(std::vector<std::vector<int>> ss) {
    std::sort(ss.begin(), ss.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    std::vector<std::vector<int>> out;
    for (const auto& s : ss) {
        bool covered = false;
        for (const auto& t : out)
            if (subset_of(s, t)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(s);
    }
    return out;
}

}  // namespace

std::optional<int> SimplicialComplex::vertex_index(
    const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

ValidationReport validate_complex(const SimplicialComplex& k) {
    ValidationReport rep;
    auto fail = [&](const std::string& e) {
        rep.ok = false;
        rep.errors.push_back(e);
    };
    std::set<std::string> names(k.vertex_names.begin(), k.vertex_names.end());
    if (names.size() != k.vertex_names.size())
        fail("duplicate vertex names");
    std::vector<bool> used(k.vertex_names.size(), false);
    for (const auto& s : k.maximal) {
        if (s.empty()) fail("empty maximal simplex");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            fail("simplex not a sorted set");
        for (int v : s) {
            if (v < 0 || v >= k.vertex_count()) {
                fail("vertex id out of range");
                break;
            }
            used[v] = true;
        }
    }
    for (std::size_t i = 0; i < k.maximal.size(); ++i)
        for (std::size_t j = 0; j < k.maximal.size(); ++j)
            if (i != j && subset_of(k.maximal[i], k.maximal[j])) {
                fail("maximal simplices are not an antichain");
                i = k.maximal.size();
                break;
            }
    for (std::size_t v = 0; v < used.size(); ++v)
        if (!used[v]) fail("unused vertex " + k.vertex_names[v]);
    return rep;
}

int complex_dim(const SimplicialComplex& k) {
    std::size_t top = 0;
    for (const auto& s : k.maximal) top = std::max(top, s.size());
    return static_cast<int>(top) - 1;
}

bool is_pure(const SimplicialComplex& k) {
    if (k.maximal.empty()) return true;
    for (const auto& s : k.maximal)
        if (s.size() != k.maximal.front().size()) return false;
    return true;
}

SimplicialComplex dual_of_polytope(const CombinatorialPolytope& p) {
    require_valid(p, "dual_of_polytope");
    SimplicialComplex k;
    k.vertex_names = p.facet_names();
    for (const FacetSet& s : p.vertices())
        k.maximal.push_back(std::vector<int>(s.begin(), s.end()));
    return k;
}

SimplicialComplex simplicial_k_wedge(const SimplicialComplex& k, int v,
                                     int wedge_k, bool literal) {
    if (v < 0 || v >= k.vertex_count())
        throw polytope_error("simplicial_k_wedge: no such vertex");
    if (wedge_k < 1) throw polytope_error("simplicial_k_wedge: k must be >= 1");
    int r = k.vertex_count();

    SimplicialComplex out;
    out.vertex_names = k.vertex_names;
    out.vertex_names[v] = k.vertex_names[v] + "^0";
    std::vector<int> copies = {v};
    for (int t = 1; t <= wedge_k; ++t) {
        out.vertex_names.push_back(k.vertex_names[v] + "^" +
                                   std::to_string(t));
        copies.push_back(r + t - 1);
    }

    std::vector<std::vector<int>> sims;
    for (const auto& m : k.maximal) {
        if (std::binary_search(m.begin(), m.end(), v)) {
            // full new simplex joined with the link
            std::vector<int> s = copies;
            for (int w : m)
                if (w != v) s.push_back(w);
            std::sort(s.begin(), s.end());
            sims.push_back(s);
        } else if (literal) {
            for (int c : copies) {
                std::vector<int> s = m;
                s.push_back(c);
                std::sort(s.begin(), s.end());
                sims.push_back(s);
            }
        } else {
            // boundary facets of the new simplex joined with the rest
            for (std::size_t drop = 0; drop < copies.size(); ++drop) {
                std::vector<int> s = m;
                for (std::size_t t = 0; t < copies.size(); ++t)
                    if (t != drop) s.push_back(copies[t]);
                std::sort(s.begin(), s.end());
                sims.push_back(s);
            }
        }
    }
    out.maximal = maximalize(std::move(sims));
    return out;
}

ValidationReport validate_cones(const SimplicialComplex& k,
                                const VertexCharMap& lambda) {
    ValidationReport rep;
    if (static_cast<int>(lambda.vectors.size()) != k.vertex_count()) {
        rep.ok = false;
        rep.errors.push_back("one vector per vertex required");
        return rep;
    }
    for (const auto& s : k.maximal) {
        std::vector<IntVector> rows;
        for (int v : s) rows.push_back(lambda.vectors.at(v));
        IntMatrix m(rows.size(), lambda.ambient_rank);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != lambda.ambient_rank) {
                rep.ok = false;
                rep.errors.push_back("vector of wrong rank");
                return rep;
            }
            for (int j = 0; j < lambda.ambient_rank; ++j)
                m.at(i, j) = rows[i][j];
        }
        if (smith_normal_form(m).rank() != rows.size()) {
            rep.ok = false;
            std::string names;
            for (int v : s) {
                if (!names.empty()) names += ",";
                names += k.vertex_names[v];
            }
            rep.errors.push_back("dependent vectors in cone {" + names + "}");
        }
    }
    return rep;
}

Int cone_determinant(const VertexCharMap& lambda,
                     const std::vector<int>& simplex) {
    if (static_cast<int>(simplex.size()) != lambda.ambient_rank)
        throw polytope_error("cone_determinant: simplex size must equal rank");
    IntMatrix m(simplex.size(), simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i)
        for (std::size_t j = 0; j < simplex.size(); ++j)
            m.at(i, j) = lambda.vectors.at(simplex[i])[j];
    return det_exact(m);
}

VertexCharMap wedge_vertex_vectors(const SimplicialComplex& k,
                                   const VertexCharMap& lambda, int v,
                                   const Int& a) {
    if (a == 1)
        throw polytope_error("wedge parameter a = 1 gives a degenerate map");
    if (v < 0 || v >= k.vertex_count())
        throw polytope_error("wedge_vertex_vectors: no such vertex");
    int n = lambda.ambient_rank;
    auto lift = [&](const Int& c0, const Int& c1, const IntVector& tail) {
        IntVector w = {c0, c1};
        w.insert(w.end(), tail.begin(), tail.end());
        return w;
    };
    VertexCharMap out;
    out.ambient_rank = n + 2;
    for (int i = 0; i < k.vertex_count(); ++i)
        out.vectors.push_back(i == v ? lift(-1, -1, lambda.vectors.at(v))
                                     : lift(0, 0, lambda.vectors.at(i)));
    IntVector zeros(n, 0);
    out.vectors.push_back(lift(1, a, zeros));
    out.vectors.push_back(lift(0, 1, zeros));

    auto rep = validate_cones(simplicial_k_wedge(k, v, 2), out);
    if (!rep.ok)
        throw polytope_error("wedge vectors are not a fan assignment: " +
                             rep.summary());
    return out;
}

namespace {

// co-occurrence counts between vertex pairs over the maximal simplices
std::vector<std::vector<int>> cooc(const SimplicialComplex& k) {
    int r = k.vertex_count();
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
    for (const auto& s : k.maximal)
        for (int u : s)
            for (int w : s) ++m[u][w];
    return m;
}

struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::vector<std::vector<int>> ca, cb;
    std::vector<int> map;      // a vertex -> b vertex
    std::vector<bool> taken;

    bool consistent(int u, int w) {
        if (ca[u][u] != cb[w][w]) return false;
        for (int u2 = 0; u2 < static_cast<int>(map.size()); ++u2)
            if (map[u2] >= 0 && ca[u][u2] != cb[w][map[u2]]) return false;
        return true;
    }

    bool full_check() {
        std::set<std::vector<int>> bs(b.maximal.begin(), b.maximal.end());
        for (const auto& s : a.maximal) {
            std::vector<int> img;
            for (int u : s) img.push_back(map[u]);
            std::sort(img.begin(), img.end());
            if (!bs.count(img)) return false;
        }
        return true;
    }

    bool dfs(int u) {
        if (u == a.vertex_count()) return full_check();
        for (int w = 0; w < b.vertex_count(); ++w) {
            if (taken[w] || !consistent(u, w)) continue;
            map[u] = w;
            taken[w] = true;
            if (dfs(u + 1)) return true;
            map[u] = -1;
            taken[w] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_complex_isomorphism(
    const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() ||
        a.maximal.size() != b.maximal.size())
        return std::nullopt;
    IsoSearch s{a, b, cooc(a), cooc(b),
                std::vector<int>(a.vertex_count(), -1),
                std::vector<bool>(b.vertex_count(), false)};
    if (s.dfs(0)) return s.map;
    return std::nullopt;
}

bool complexes_isomorphic(const SimplicialComplex& a,
                          const SimplicialComplex& b) {
    return find_complex_isomorphism(a, b).has_value();
}

}  // namespace polycert
