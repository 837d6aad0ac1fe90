#include "polycert/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace polycert {

FacetSet set_union(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

FacetSet set_intersect(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

FacetSet set_difference(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

bool is_subset(const FacetSet& a, const FacetSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string ValidationReport::summary() const {
    if (ok) return "pass";
    std::ostringstream os;
    for (std::size_t i = 0; i < errors.size(); ++i)
        os << (i ? "; " : "") << errors[i];
    return os.str();
}

CombinatorialPolytope::CombinatorialPolytope(int dim,
                                             std::vector<std::string> names,
                                             std::vector<FacetSet> vertices)
    : dim_(dim), facet_names_(std::move(names)), vertices_(std::move(vertices)) {
    for (auto& v : vertices_) std::sort(v.begin(), v.end());
    std::set<std::string> seen(facet_names_.begin(), facet_names_.end());
    if (seen.size() != facet_names_.size())
        throw polytope_error("duplicate facet names");
}

std::optional<int> CombinatorialPolytope::facet_index(
    const std::string& name) const {
    for (std::size_t i = 0; i < facet_names_.size(); ++i)
        if (facet_names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool CombinatorialPolytope::vertex_on_facet(int v, int f) const {
    const FacetSet& s = vertices_.at(v);
    return std::binary_search(s.begin(), s.end(), f);
}

std::vector<int> CombinatorialPolytope::vertices_of_facet(int f) const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_on_facet(v, f)) out.push_back(v);
    return out;
}

std::optional<int> CombinatorialPolytope::find_vertex(const FacetSet& s) const {
    FacetSet key = s;
    std::sort(key.begin(), key.end());
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == key) return v;
    return std::nullopt;
}

std::vector<int> CombinatorialPolytope::vertex_neighbours(int v) const {
    std::vector<int> out;
    for (int w = 0; w < vertex_count(); ++w) {
        if (w == v) continue;
        if (static_cast<int>(set_intersect(vertices_[v], vertices_[w]).size()) ==
            dim_ - 1)
            out.push_back(w);
    }
    return out;
}

ValidationReport validate(const CombinatorialPolytope& p) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.errors.push_back(msg);
    };

    int n = p.dim();
    int r = p.facet_count();
    int m = p.vertex_count();
    if (n < 1) {
        fail("dimension must be at least 1");
        return rep;
    }
    if (m == 0) {
        fail("no vertices");
        return rep;
    }

    for (int v = 0; v < m; ++v) {
        const FacetSet& s = p.vertex_facets(v);
        if (static_cast<int>(s.size()) != n) {
            fail("simplicity: vertex " + std::to_string(v) + " lies on " +
                 std::to_string(s.size()) + " facets, expected " +
                 std::to_string(n));
            return rep;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= r) {
                fail("vertex " + std::to_string(v) + " uses unknown facet index " +
                     std::to_string(s[i]));
                return rep;
            }
            if (i > 0 && s[i] == s[i - 1]) {
                fail("simplicity: vertex " + std::to_string(v) +
                     " repeats facet index " + std::to_string(s[i]));
                return rep;
            }
        }
    }

    {
        std::set<FacetSet> seen;
        for (int v = 0; v < m; ++v)
            if (!seen.insert(p.vertex_facets(v)).second)
                fail("duplicate vertex: " + std::to_string(v));
        if (!rep.ok) return rep;
    }

    {
        std::vector<bool> used(r, false);
        for (int v = 0; v < m; ++v)
            for (int f : p.vertex_facets(v)) used[f] = true;
        for (int f = 0; f < r; ++f)
            if (!used[f]) fail("empty facet: " + p.facet_name(f));
        if (!rep.ok) return rep;
    }

    if (n == 1) {
        if (m != 2 || p.vertex_facets(0) == p.vertex_facets(1))
            fail("a 1-polytope must be two vertices on two distinct facets");
        return rep;
    }

    {
        std::map<FacetSet, int> ridge_count;
        for (int v = 0; v < m; ++v) {
            const FacetSet& s = p.vertex_facets(v);
            for (int drop = 0; drop < n; ++drop) {
                FacetSet ridge;
                for (int i = 0; i < n; ++i)
                    if (i != drop) ridge.push_back(s[i]);
                ++ridge_count[ridge];
            }
        }
        for (const auto& [ridge, count] : ridge_count) {
            if (count == 2) continue;
            std::ostringstream os;
            os << "ridge condition: facet set {";
            for (std::size_t i = 0; i < ridge.size(); ++i)
                os << (i ? "," : "") << p.facet_name(ridge[i]);
            os << "} lies in " << count << " vertices, expected 2";
            fail(os.str());
            return rep;
        }
    }

    {
        std::vector<bool> seen(m, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : p.vertex_neighbours(v))
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != m) fail("vertex-edge graph is disconnected");
    }
    return rep;
}

void require_valid(const CombinatorialPolytope& p, const std::string& what) {
    ValidationReport rep = validate(p);
    if (!rep.ok)
        throw polytope_error(what + ": " + rep.summary());
}

Face face_from_facets(const CombinatorialPolytope& p, FacetSet s) {
    std::sort(s.begin(), s.end());
    for (int f : s)
        if (f < 0 || f >= p.facet_count())
            throw polytope_error("unknown facet index " + std::to_string(f));
    Face face;
    face.defining_facets = s;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (is_subset(s, p.vertex_facets(v))) face.vertices.push_back(v);
    if (face.vertices.empty()) return face;
    face.support = p.vertex_facets(face.vertices.front());
    for (int v : face.vertices)
        face.support = set_intersect(face.support, p.vertex_facets(v));
    face.dim = p.dim() - static_cast<int>(face.support.size());
    return face;
}

FacePolytope face_as_polytope(const CombinatorialPolytope& p, const Face& f) {
    if (f.is_empty()) throw polytope_error("face_as_polytope of empty face");
    if (f.dim < 1)
        throw polytope_error("face_as_polytope needs dimension at least 1");
    FacePolytope out;
    out.vertex_ids = f.vertices;
    std::set<int> incident;
    for (int v : f.vertices)
        for (int g : set_difference(p.vertex_facets(v), f.support))
            incident.insert(g);
    out.facet_origins.assign(incident.begin(), incident.end());
    std::vector<std::string> names;
    for (int g : out.facet_origins) names.push_back(p.facet_name(g));
    std::vector<FacetSet> verts;
    for (int v : f.vertices) {
        FacetSet s;
        for (int g : set_difference(p.vertex_facets(v), f.support)) {
            auto it = std::lower_bound(out.facet_origins.begin(),
                                       out.facet_origins.end(), g);
            s.push_back(static_cast<int>(it - out.facet_origins.begin()));
        }
        verts.push_back(std::move(s));
    }
    out.poly = CombinatorialPolytope(f.dim, std::move(names), std::move(verts));
    return out;
}

std::vector<Face> all_faces(const CombinatorialPolytope& p) {
    std::vector<Face> out;
    std::set<std::vector<int>> seen;
    int n = p.dim();
    for (int v = 0; v < p.vertex_count(); ++v) {
        const FacetSet& s = p.vertex_facets(v);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            FacetSet sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            Face f = face_from_facets(p, sub);
            if (f.dim >= n) continue;
            if (seen.insert(f.vertices).second) out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<std::size_t> face_counts(const CombinatorialPolytope& p) {
    std::vector<std::size_t> counts(p.dim(), 0);
    for (const Face& f : all_faces(p)) ++counts[f.dim];
    return counts;
}

CombinatorialPolytope product_with_simplex(const CombinatorialPolytope& p,
                                           int k) {
    if (k < 1) throw polytope_error("product_with_simplex needs k >= 1");
    require_valid(p, "product_with_simplex input");
    int r = p.facet_count();
    std::vector<std::string> names = p.facet_names();
    for (int s = 0; s <= k; ++s) {
        std::string name = "D" + std::to_string(s);
        while (std::find(names.begin(), names.end(), name) != names.end())
            name += "_";
        names.push_back(name);
    }
    std::vector<FacetSet> verts;
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int s = 0; s <= k; ++s) {
            FacetSet f = p.vertex_facets(v);
            for (int t = 0; t <= k; ++t)
                if (t != s) f.push_back(r + t);
            verts.push_back(std::move(f));
        }
    CombinatorialPolytope out(p.dim() + k, std::move(names), std::move(verts));
    require_valid(out, "product_with_simplex output");
    return out;
}

namespace {

struct IsoContext {
    const CombinatorialPolytope& p;
    const CombinatorialPolytope& q;
    std::vector<std::vector<int>> pfv, qfv;       // facet -> vertex list
    std::vector<std::vector<int>> pint, qint;     // pairwise |V(f) cap V(g)|
    std::vector<int> assign;                      // p facet -> q facet
    std::vector<bool> used;

    bool vertex_check() {
        std::set<FacetSet> qsets;
        for (int v = 0; v < q.vertex_count(); ++v)
            qsets.insert(q.vertex_facets(v));
        std::set<FacetSet> images;
        for (int v = 0; v < p.vertex_count(); ++v) {
            FacetSet img;
            for (int f : p.vertex_facets(v)) img.push_back(assign[f]);
            std::sort(img.begin(), img.end());
            if (!qsets.count(img)) return false;
            if (!images.insert(img).second) return false;
        }
        return true;
    }

    bool extend(int f) {
        if (f == p.facet_count()) return vertex_check();
        for (int g = 0; g < q.facet_count(); ++g) {
            if (used[g]) continue;
            if (pfv[f].size() != qfv[g].size()) continue;
            bool ok = true;
            for (int f2 = 0; f2 < f && ok; ++f2)
                if (pint[f][f2] != qint[g][assign[f2]]) ok = false;
            if (!ok) continue;
            assign[f] = g;
            used[g] = true;
            if (extend(f + 1)) return true;
            used[g] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(
    const CombinatorialPolytope& p, const CombinatorialPolytope& q) {
    if (p.dim() != q.dim() || p.facet_count() != q.facet_count() ||
        p.vertex_count() != q.vertex_count())
        return std::nullopt;
    IsoContext ctx{p, q, {}, {}, {}, {}, {}, {}};
    int r = p.facet_count();
    for (int f = 0; f < r; ++f) {
        ctx.pfv.push_back(p.vertices_of_facet(f));
        ctx.qfv.push_back(q.vertices_of_facet(f));
    }
    auto inter = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return static_cast<int>(out.size());
    };
    ctx.pint.assign(r, std::vector<int>(r, 0));
    ctx.qint.assign(r, std::vector<int>(r, 0));
    for (int f = 0; f < r; ++f)
        for (int g = 0; g < r; ++g) {
            ctx.pint[f][g] = inter(ctx.pfv[f], ctx.pfv[g]);
            ctx.qint[f][g] = inter(ctx.qfv[f], ctx.qfv[g]);
        }
    ctx.assign.assign(r, -1);
    ctx.used.assign(r, false);
    if (ctx.extend(0)) return ctx.assign;
    return std::nullopt;
}

bool isomorphic(const CombinatorialPolytope& p,
                const CombinatorialPolytope& q) {
    return find_isomorphism(p, q).has_value();
}

}  // namespace polycert
