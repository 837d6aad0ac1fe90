#include "polycert/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace polycert {

namespace {

std::string unique_name(std::string name,
                        const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
        name += "_";
    return name;
}

IntMatrix rows_matrix(const std::vector<IntVector>& rows) {
    return IntMatrix{std::vector<IntVector>(rows)};
}

}  // namespace

BlowupResult blowup(const CombinatorialPolytope& p, const Face& f) {
    if (f.is_empty()) throw polytope_error("blowup: empty face");
    int n = p.dim();
    if (f.dim == n) throw polytope_error("blowup: whole polytope");
    if (f.dim == n - 1)
        throw polytope_error("blowup: truncating a facet is a no-op");

    std::vector<std::string> names = p.facet_names();
    std::ostringstream tn;
    tn << "T:";
    for (std::size_t i = 0; i < f.support.size(); ++i)
        tn << (i ? "," : "") << p.facet_name(f.support[i]);
    names.push_back(unique_name(tn.str(), names));
    int t = p.facet_count();

    std::vector<FacetSet> verts;
    for (int v = 0; v < p.vertex_count(); ++v) {
        const FacetSet& s = p.vertex_facets(v);
        if (!is_subset(f.support, s)) {
            verts.push_back(s);
            continue;
        }
        for (int h : f.support) {
            FacetSet w = set_difference(s, {h});
            w.push_back(t);
            verts.push_back(std::move(w));
        }
    }
    BlowupResult out{CombinatorialPolytope(n, std::move(names),
                                           std::move(verts)),
                     t, {}};
    for (int g = 0; g < p.facet_count(); ++g) out.facet_map.push_back(g);
    require_valid(out.result, "blowup output");
    return out;
}

namespace {

// Check the candidate p_facets against the fiber conditions; fills the
// labeling on success.
bool verify_structure(const CombinatorialPolytope& p, ProductStructure& ps) {
    int n = p.dim();
    int nd = static_cast<int>(ps.p_facets.size());  // n - dim(base)
    ps.fiber_key.clear();
    ps.miss_index.clear();
    FacetSet removed = {ps.big_facet.support[0]};
    for (int g : ps.p_facets) removed.push_back(g);
    std::sort(removed.begin(), removed.end());

    std::map<FacetSet, std::vector<int>> fibers;
    for (int w : ps.big_facet.vertices) {
        const FacetSet& s = p.vertex_facets(w);
        int miss = -1;
        int present = 0;
        for (int i = 0; i < nd; ++i) {
            if (std::binary_search(s.begin(), s.end(), ps.p_facets[i]))
                ++present;
            else
                miss = i;
        }
        if (present != nd - 1) return false;
        ps.miss_index[w] = miss;
        FacetSet key = set_difference(s, removed);
        fibers[key].push_back(w);
        ps.fiber_key[w] = std::move(key);
    }
    for (const auto& [key, members] : fibers) {
        if (static_cast<int>(members.size()) != nd) return false;
        std::vector<bool> seen(nd, false);
        for (int w : members) {
            int m = ps.miss_index[w];
            if (seen[m]) return false;
            seen[m] = true;
        }
    }
    std::size_t base_count = ps.base_face.vertices.size();
    if (ps.big_facet.vertices.size() != base_count * nd) return false;
    (void)n;
    return true;
}

}  // namespace

ProductStructure detect_product_structure(const CombinatorialPolytope& p,
                                          int big_facet, const Face& base) {
    if (big_facet < 0 || big_facet >= p.facet_count())
        throw polytope_error("detect_product_structure: unknown facet");
    Face big = face_from_facets(p, {big_facet});
    if (base.is_empty())
        throw polytope_error("detect_product_structure: empty base face");
    if (!is_subset(FacetSet(base.vertices.begin(), base.vertices.end()),
                   FacetSet(big.vertices.begin(), big.vertices.end())))
        throw polytope_error(
            "detect_product_structure: base face not inside the facet");
    int n = p.dim();
    int d = base.dim;
    if (d > n - 2)
        throw polytope_error(
            "detect_product_structure: base face must have codimension >= 2");

    FacetSet hs = set_difference(base.support, {big_facet});
    std::vector<ProductStructure> found;
    std::vector<std::string> rejected;
    for (int g = 0; g < p.facet_count(); ++g) {
        if (g == big_facet) continue;
        if (std::binary_search(base.support.begin(), base.support.end(), g))
            continue;
        Face ridge = face_from_facets(p, {big_facet, g});
        if (ridge.dim != n - 2) continue;
        bool contains_base = true;
        for (int v : base.vertices)
            if (!p.vertex_on_facet(v, g)) contains_base = false;
        if (contains_base) continue;

        ProductStructure ps;
        ps.big_facet = big;
        ps.base_face = base;
        ps.p_facets = hs;
        ps.p_facets.push_back(g);
        if (verify_structure(p, ps))
            found.push_back(std::move(ps));
        else
            rejected.push_back(p.facet_name(g));
    }
    if (found.empty()) {
        std::ostringstream os;
        os << "no product structure: " << p.facet_name(big_facet)
           << " does not decompose as the base face times a simplex";
        throw polytope_error(os.str());
    }
    if (found.size() > 1) {
        std::ostringstream os;
        os << "ambiguous product structure on " << p.facet_name(big_facet)
           << "; completing facets:";
        for (const auto& ps : found)
            os << " " << p.facet_name(ps.p_facets.back());
        throw polytope_error(os.str());
    }
    return found.front();
}

BlowdownResult blowdown(const CombinatorialPolytope& p,
                        const ProductStructure& ps) {
    int big = ps.big_facet.support.at(0);
    std::vector<std::string> names;
    std::vector<int> facet_map(p.facet_count(), -1);
    for (int g = 0; g < p.facet_count(); ++g) {
        if (g == big) continue;
        facet_map[g] = static_cast<int>(names.size());
        names.push_back(p.facet_name(g));
    }
    FacetSet new_p_facets;
    for (int g : ps.p_facets) new_p_facets.push_back(facet_map[g]);
    std::sort(new_p_facets.begin(), new_p_facets.end());

    std::vector<FacetSet> verts;
    std::vector<int> vertex_map(p.vertex_count(), -1);
    std::map<FacetSet, int> fiber_vertex;
    for (int v = 0; v < p.vertex_count(); ++v) {
        auto key_it = ps.fiber_key.find(v);
        if (key_it == ps.fiber_key.end()) {
            FacetSet img;
            for (int g : p.vertex_facets(v)) img.push_back(facet_map[g]);
            std::sort(img.begin(), img.end());
            vertex_map[v] = static_cast<int>(verts.size());
            verts.push_back(std::move(img));
            continue;
        }
        auto [it, fresh] =
            fiber_vertex.try_emplace(key_it->second,
                                     static_cast<int>(verts.size()));
        if (fresh) {
            FacetSet img;
            for (int g : key_it->second) img.push_back(facet_map[g]);
            for (int g : new_p_facets) img.push_back(g);
            std::sort(img.begin(), img.end());
            verts.push_back(std::move(img));
        }
        vertex_map[v] = it->second;
    }
    BlowdownResult out{CombinatorialPolytope(p.dim(), std::move(names),
                                             std::move(verts)),
                       ps, std::move(facet_map), std::move(vertex_map)};
    ValidationReport rep = validate(out.result);
    if (!rep.ok)
        throw polytope_error("blowdown output is not a simple polytope: " +
                             rep.summary());
    return out;
}

BlowdownResult blowdown(const CombinatorialPolytope& p, int big_facet,
                        const Face& base) {
    return blowdown(p, detect_product_structure(p, big_facet, base));
}

WedgeResult k_wedge(const CombinatorialPolytope& p, int facet, int k) {
    if (facet < 0 || facet >= p.facet_count())
        throw polytope_error("k_wedge: unknown facet");
    if (k < 1) throw polytope_error("k_wedge needs k >= 1");
    require_valid(p, "k_wedge input");

    int r = p.facet_count();
    std::vector<std::string> names;
    std::vector<int> facet_map(r, -1);
    for (int g = 0; g < r; ++g) {
        if (g == facet) continue;
        facet_map[g] = static_cast<int>(names.size());
        names.push_back(p.facet_name(g));
    }
    int h = static_cast<int>(names.size());
    names.push_back(unique_name("H", names));
    std::vector<int> ws;
    for (int s = 1; s <= k; ++s) {
        ws.push_back(static_cast<int>(names.size()));
        names.push_back(unique_name("W" + std::to_string(s), names));
    }

    std::vector<FacetSet> verts;
    for (int v = 0; v < p.vertex_count(); ++v) {
        const FacetSet& s = p.vertex_facets(v);
        FacetSet img;
        for (int g : s)
            if (g != facet) img.push_back(facet_map[g]);
        std::sort(img.begin(), img.end());
        if (p.vertex_on_facet(v, facet)) {
            FacetSet w = img;
            w.push_back(h);
            for (int x : ws) w.push_back(x);
            verts.push_back(std::move(w));
            continue;
        }
        FacetSet corner = img;
        for (int x : ws) corner.push_back(x);
        verts.push_back(std::move(corner));
        for (int t = 0; t < k; ++t) {
            FacetSet w = img;
            w.push_back(h);
            for (int u = 0; u < k; ++u)
                if (u != t) w.push_back(ws[u]);
            verts.push_back(std::move(w));
        }
    }
    WedgeResult out{CombinatorialPolytope(p.dim() + k, std::move(names),
                                          std::move(verts)),
                    std::move(facet_map), h, std::move(ws)};
    require_valid(out.result, "k_wedge output");
    return out;
}

namespace {

// The simplex-direction rows shared by the product and wedge maps; index 0
// is the row for D0 / H, index s >= 1 for Ds / Ws.
std::vector<IntVector> simplex_rows(const IntVector& wedged_vector, int k,
                                    const Int& a) {
    int n = static_cast<int>(wedged_vector.size());
    std::vector<IntVector> rows;
    IntVector d0(k, Int(-1));
    for (const Int& x : wedged_vector) d0.push_back(x);
    rows.push_back(std::move(d0));
    IntVector d1(n + k, Int(0));
    d1[0] = 1;
    d1[1] = a;
    rows.push_back(std::move(d1));
    for (int s = 2; s <= k; ++s) {
        IntVector ds(n + k, Int(0));
        ds[s - 1] = 1;
        rows.push_back(std::move(ds));
    }
    return rows;
}

void check_wedge_params(const CombinatorialPolytope& p, int wedged_facet,
                        int k, const Int& a) {
    if (wedged_facet < 0 || wedged_facet >= p.facet_count())
        throw polytope_error("wedge characteristic map: unknown facet");
    if (k < 1) throw polytope_error("wedge characteristic map needs k >= 1");
    if (a == 1)
        throw polytope_error(
            "wedge characteristic map: a = 1 gives dependent vectors");
}

}  // namespace

CharMap wedge_char_on_product(const CombinatorialPolytope& p,
                              const CharMap& lambda, int wedged_facet, int k,
                              const Int& a) {
    check_wedge_params(p, wedged_facet, k, a);
    require_rchar(p, lambda, "wedge_char_on_product input");
    int n = p.dim();
    CharMap out;
    out.ambient_rank = n + k;
    for (int g = 0; g < p.facet_count(); ++g) {
        IntVector row(k, Int(0));
        for (const Int& x : lambda.at(g)) row.push_back(x);
        out.vectors.push_back(std::move(row));
    }
    for (auto& row : simplex_rows(lambda.at(wedged_facet), k, a))
        out.vectors.push_back(std::move(row));
    require_rchar(product_with_simplex(p, k), out,
                  "wedge_char_on_product output");
    return out;
}

CharMap k_wedge_char(const CombinatorialPolytope& p, const CharMap& lambda,
                     int wedged_facet, int k, const Int& a) {
    check_wedge_params(p, wedged_facet, k, a);
    require_rchar(p, lambda, "k_wedge_char input");
    int n = p.dim();
    CharMap out;
    out.ambient_rank = n + k;
    for (int g = 0; g < p.facet_count(); ++g) {
        if (g == wedged_facet) continue;
        IntVector row(k, Int(0));
        for (const Int& x : lambda.at(g)) row.push_back(x);
        out.vectors.push_back(std::move(row));
    }
    for (auto& row : simplex_rows(lambda.at(wedged_facet), k, a))
        out.vectors.push_back(std::move(row));
    require_rchar(k_wedge(p, wedged_facet, k).result, out,
                  "k_wedge_char output");
    return out;
}

RestrictedChar restrict_char(const CombinatorialPolytope& p,
                             const CharMap& lambda, const BlowdownResult& bd) {
    require_rchar(p, lambda, "restrict_char input");
    RestrictedChar out;
    out.char_map.ambient_rank = lambda.ambient_rank;
    out.char_map.vectors.resize(bd.result.facet_count());
    for (int g = 0; g < p.facet_count(); ++g)
        if (bd.facet_map[g] >= 0)
            out.char_map.vectors[bd.facet_map[g]] = lambda.at(g);

    std::vector<bool> merged(bd.result.vertex_count(), false);
    for (const auto& [w, key] : bd.ps.fiber_key) {
        (void)key;
        merged[bd.vertex_map[w]] = true;
    }
    for (int v = 0; v < bd.result.vertex_count(); ++v) {
        if (!merged[v]) continue;
        out.merged_vertices.push_back(v);
        std::vector<IntVector> rows;
        for (int g : bd.result.vertex_facets(v))
            rows.push_back(out.char_map.at(g));
        out.merged_dets.push_back(det_exact(rows_matrix(rows)));
    }
    ValidationReport rep = validate_rchar(bd.result, out.char_map);
    if (!rep.ok)
        throw polytope_error(
            "restriction is not a characteristic map: " + rep.summary());
    return out;
}

}  // namespace polycert
