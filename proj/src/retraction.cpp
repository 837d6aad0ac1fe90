#include "polycert/retraction.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace polycert {

namespace {

bool face_has_vertex(const Face& f, int v) {
    return std::binary_search(f.vertices.begin(), f.vertices.end(), v);
}

// keep only faces whose vertex set is not strictly contained in another's
std::vector<Face> maximalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.vertices.size() > b.vertices.size() ||
               (a.vertices.size() == b.vertices.size() &&
                a.vertices < b.vertices);
    });
    std::vector<Face> out;
    for (auto& f : faces) {
        bool covered = false;
        for (const Face& g : out)
            if (is_subset(f.vertices, g.vertices)) covered = true;
        if (!covered) out.push_back(std::move(f));
    }
    return out;
}

std::vector<Face> facets_of_face(const CombinatorialPolytope& p,
                                 const Face& f) {
    std::vector<Face> out;
    if (f.dim <= 0) return out;
    for (int g = 0; g < p.facet_count(); ++g) {
        if (std::binary_search(f.support.begin(), f.support.end(), g))
            continue;
        FacetSet s = f.support;
        s.push_back(g);
        std::sort(s.begin(), s.end());
        Face sub = face_from_facets(p, s);
        if (sub.dim == f.dim - 1) out.push_back(std::move(sub));
    }
    // distinct facets can cut the same face; dedupe
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        return a.vertices < b.vertices;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<int> SubComplex::vertex_ids() const {
    std::set<int> vs;
    for (const Face& f : maximal_faces)
        vs.insert(f.vertices.begin(), f.vertices.end());
    return std::vector<int>(vs.begin(), vs.end());
}

std::vector<int> RetractionSequence::vertex_order() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.vertex);
    return out;
}

SubComplex whole_complex(const CombinatorialPolytope& p) {
    return SubComplex{{face_from_facets(p, {})}};
}

std::vector<int> free_vertices(const SubComplex& b) {
    std::map<int, int> count;
    for (const Face& f : b.maximal_faces)
        for (int v : f.vertices) ++count[v];
    std::vector<int> out;
    for (const auto& [v, c] : count)
        if (c == 1) out.push_back(v);
    return out;
}

namespace {

const Face* unique_containing_face(const SubComplex& b, int v) {
    const Face* found = nullptr;
    for (const Face& f : b.maximal_faces) {
        if (!face_has_vertex(f, v)) continue;
        if (found) return nullptr;
        found = &f;
    }
    return found;
}

}  // namespace

SubComplex next_complex(const CombinatorialPolytope& p, const SubComplex& b,
                        int vertex) {
    if (!unique_containing_face(b, vertex))
        throw polytope_error("next_complex: vertex is not free");
    std::vector<Face> parts;
    for (const Face& m : b.maximal_faces) {
        if (!face_has_vertex(m, vertex)) {
            parts.push_back(m);
            continue;
        }
        for (Face& sub : facets_of_face(p, m))
            if (!face_has_vertex(sub, vertex)) parts.push_back(std::move(sub));
    }
    return SubComplex{maximalize(std::move(parts))};
}

namespace {

struct Searcher {
    const CombinatorialPolytope& p;
    std::optional<int> start;
    std::set<int> defer;
    const StepPredicate& predicate;
    std::optional<std::mt19937> rng;
    std::vector<RetractionStep> steps;
    std::set<std::vector<bool>> dead;
    std::vector<bool> removed;

    bool dfs(const SubComplex& cur) {
        if (steps.size() == static_cast<std::size_t>(p.vertex_count()))
            return true;
        if (dead.count(removed)) return false;
        std::vector<int> frees = free_vertices(cur);
        std::vector<int> cands;
        if (steps.empty() && start) {
            cands = {*start};
        } else {
            for (int v : frees)
                if (!defer.count(v)) cands.push_back(v);
            if (cands.empty()) cands = frees;
        }
        if (rng) std::shuffle(cands.begin(), cands.end(), *rng);
        for (int b : cands) {
            const Face* e = unique_containing_face(cur, b);
            if (!e) continue;  // only possible for a pinned start
            if (predicate && !predicate(*e, b)) continue;
            steps.push_back({cur, *e, b});
            removed[b] = true;
            SubComplex next = next_complex(p, cur, b);
            if (dfs(next)) return true;
            removed[b] = false;
            steps.pop_back();
        }
        dead.insert(removed);
        return false;
    }
};

}  // namespace

std::optional<RetractionSequence> find_retraction(
    const CombinatorialPolytope& p, std::optional<int> start,
    const std::vector<int>& defer, const StepPredicate& predicate,
    std::optional<unsigned> seed) {
    require_valid(p, "find_retraction input");
    if (start && (*start < 0 || *start >= p.vertex_count()))
        throw polytope_error("find_retraction: unknown start vertex");
    Searcher s{p, start, std::set<int>(defer.begin(), defer.end()), predicate,
               std::nullopt,
               {},
               {},
               std::vector<bool>(p.vertex_count(), false)};
    if (seed) s.rng = std::mt19937(*seed);
    if (!s.dfs(whole_complex(p))) return std::nullopt;
    return RetractionSequence{std::move(s.steps)};
}

void verify_retraction(const CombinatorialPolytope& p,
                       const RetractionSequence& seq) {
    auto fail = [](const std::string& msg) {
        throw polytope_error("retraction verification: " + msg);
    };
    if (seq.steps.size() != static_cast<std::size_t>(p.vertex_count()))
        fail("wrong number of steps");

    // the complete face list, used to recompute each complex from scratch
    std::vector<Face> faces = all_faces(p);
    faces.push_back(face_from_facets(p, {}));

    std::vector<Face> expected = {face_from_facets(p, {})};
    std::vector<bool> seen(p.vertex_count(), false);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const RetractionStep& st = seq.steps[i];
        if (seen.at(st.vertex)) fail("vertex retracted twice");
        seen[st.vertex] = true;

        auto key = [](const std::vector<Face>& fs) {
            std::set<std::vector<int>> k;
            for (const Face& f : fs) k.insert(f.vertices);
            return k;
        };
        std::set<std::vector<int>> have;
        for (const Face& f : st.complex.maximal_faces)
            have.insert(f.vertices);
        if (have != key(expected)) fail("complex mismatch at a step");

        int containing = 0;
        for (const Face& f : expected)
            if (face_has_vertex(f, st.vertex)) ++containing;
        if (containing != 1) fail("vertex is not free");
        if (st.max_face.vertices.empty() ||
            !face_has_vertex(st.max_face, st.vertex))
            fail("recorded maximal face misses the vertex");
        bool matches = false;
        for (const Face& f : expected)
            if (f.vertices == st.max_face.vertices &&
                face_has_vertex(f, st.vertex))
                matches = true;
        if (!matches) fail("recorded maximal face is not the containing one");

        // next complex, recomputed from the global face list
        std::vector<Face> survivors;
        for (const Face& f : faces) {
            if (face_has_vertex(f, st.vertex)) continue;
            bool inside = false;
            for (const Face& m : expected)
                if (is_subset(f.vertices, m.vertices)) inside = true;
            if (inside) survivors.push_back(f);
        }
        expected = maximalize(std::move(survivors));
    }
    if (!expected.empty()) fail("leftover faces after the last step");
    const RetractionStep& last = seq.steps.back();
    if (last.max_face.dim != 0) fail("last step is not a single vertex");
}

std::vector<Int> singularity_trace(const CombinatorialPolytope& p,
                                   const CharMap& lambda,
                                   const RetractionSequence& seq) {
    std::vector<Int> out;
    for (const auto& st : seq.steps)
        out.push_back(
            singularity_order_in_face(p, lambda, st.max_face, st.vertex));
    return out;
}

std::optional<RetractionSequence> find_p_clean_retraction(
    const CombinatorialPolytope& p, const CharMap& lambda, const Int& prime,
    std::optional<int> start, const std::vector<int>& defer) {
    StepPredicate clean = [&](const Face& e, int b) {
        try {
            Int o = singularity_order_in_face(p, lambda, e, b);
            return o != 0 && o % prime != 0;
        } catch (const std::runtime_error&) {
            return false;
        }
    };
    return find_retraction(p, start, defer, clean);
}

InducedRetractionReport induced_retraction_blowdown(
    const CombinatorialPolytope& p, const RetractionSequence& seq,
    const BlowdownResult& bd, const std::optional<CharMap>& lambda) {
    if (seq.steps.size() != static_cast<std::size_t>(p.vertex_count()))
        throw polytope_error(
            "induced_retraction_blowdown: sequence does not match the "
            "polytope");
    int big = bd.ps.big_facet.support.at(0);

    // coefficients of the collapsed facet's vector over the p-facet
    // vectors, when available
    std::optional<std::vector<Rat>> coeffs;
    if (lambda) {
        std::vector<IntVector> cols;
        for (int g : bd.ps.p_facets) cols.push_back(lambda->at(g));
        try {
            coeffs = solve_rational(cols, lambda->at(big));
        } catch (const std::runtime_error&) {
        }
    }

    InducedRetractionReport out;
    SubComplex cur = whole_complex(bd.result);
    std::vector<bool> done(bd.result.vertex_count(), false);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const RetractionStep& st = seq.steps[i];
        int image = bd.vertex_map.at(st.vertex);
        if (done[image]) continue;
        const Face* e2 = unique_containing_face(cur, image);
        if (!e2)
            throw polytope_error(
                "induced_retraction_blowdown: image vertex is not free");
        const Face& e = st.max_face;
        std::vector<int> cut;
        std::set_intersection(e.vertices.begin(), e.vertices.end(),
                              bd.ps.big_facet.vertices.begin(),
                              bd.ps.big_facet.vertices.end(),
                              std::back_inserter(cut));
        StepCase tag;
        if (cut.empty())
            tag = StepCase::unaffected;
        else if (is_subset(e.vertices, bd.ps.big_facet.vertices))
            tag = StepCase::face_of;
        else if (e2->dim == e.dim)
            tag = StepCase::blowdown_of;
        else
            tag = StepCase::face_of;

        int step_index = static_cast<int>(out.sequence.steps.size());
        if (tag == StepCase::blowdown_of && lambda && coeffs) {
            try {
                out.d_values[step_index] =
                    compute_dF(p, *lambda, e, big, bd.ps.p_facets, *coeffs);
            } catch (const std::runtime_error& err) {
                out.d_errors[step_index] = err.what();
            }
        }
        out.sequence.steps.push_back({cur, *e2, image});
        out.step_cases.push_back(tag);
        out.source_steps.push_back(static_cast<int>(i));
        done[image] = true;
        cur = next_complex(bd.result, cur, image);
    }
    if (out.sequence.steps.size() !=
        static_cast<std::size_t>(bd.result.vertex_count()))
        throw polytope_error(
            "induced_retraction_blowdown: not every image vertex was "
            "reached");
    return out;
}

WedgeRetraction induced_retraction_2wedge(const CombinatorialPolytope& p,
                                          const RetractionSequence& seq,
                                          int facet, const CharMap& lambda,
                                          const Int& a) {
    if (seq.steps.size() != static_cast<std::size_t>(p.vertex_count()))
        throw polytope_error(
            "induced_retraction_2wedge: sequence does not match the "
            "polytope");
    std::vector<int> fverts = p.vertices_of_facet(facet);
    std::set<int> fset(fverts.begin(), fverts.end());
    std::vector<int> order = seq.vertex_order();
    for (std::size_t i = order.size() - fset.size(); i < order.size(); ++i)
        if (!fset.count(order[i]))
            throw polytope_error(
                "induced_retraction_2wedge: the wedged facet's vertices "
                "must be retracted last");

    WedgeRetraction out{k_wedge(p, facet, 2),
                        k_wedge_char(p, lambda, facet, 2, a),
                        {},
                        {},
                        {}};
    const CombinatorialPolytope& w = out.wedge.result;
    auto image_base = [&](int v) {
        FacetSet img;
        for (int g : p.vertex_facets(v))
            if (g != facet) img.push_back(out.wedge.facet_map[g]);
        std::sort(img.begin(), img.end());
        return img;
    };
    int h = out.wedge.h_facet;
    int w1 = out.wedge.w_facets[0];
    int w2 = out.wedge.w_facets[1];

    std::vector<std::pair<int, int>> plan;  // (wedge vertex, source step)
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        FacetSet img = image_base(v);
        auto pick = [&](std::initializer_list<int> extra) {
            FacetSet s = img;
            for (int g : extra) s.push_back(g);
            std::sort(s.begin(), s.end());
            auto found = w.find_vertex(s);
            if (!found)
                throw polytope_error(
                    "induced_retraction_2wedge: missing wedge vertex");
            return *found;
        };
        if (fset.count(v)) {
            plan.emplace_back(pick({h, w1, w2}), static_cast<int>(i));
        } else {
            plan.emplace_back(pick({w1, w2}), static_cast<int>(i));
            plan.emplace_back(pick({h, w2}), static_cast<int>(i));
            plan.emplace_back(pick({h, w1}), static_cast<int>(i));
        }
    }

    SubComplex cur = whole_complex(w);
    for (auto [b, src] : plan) {
        const Face* e = unique_containing_face(cur, b);
        if (!e)
            throw polytope_error(
                "induced_retraction_2wedge: planned vertex is not free");
        out.sequence.steps.push_back({cur, *e, b});
        out.source_steps.push_back(src);
        cur = next_complex(w, cur, b);
    }
    out.trace = singularity_trace(w, out.wedge_map, out.sequence);
    return out;
}

RetractionSequence face_induced_retraction(const CombinatorialPolytope& p,
                                           const RetractionSequence& seq,
                                           const Face& f) {
    if (f.is_empty())
        throw polytope_error("face_induced_retraction: empty face");
    RetractionSequence out;
    SubComplex cur{{f}};
    for (int b : seq.vertex_order()) {
        if (!face_has_vertex(f, b)) continue;
        const Face* e = unique_containing_face(cur, b);
        if (!e) {
            std::ostringstream os;
            os << "face_induced_retraction: restricted order is infeasible "
                  "at vertex "
               << b;
            throw polytope_error(os.str());
        }
        out.steps.push_back({cur, *e, b});
        cur = next_complex(p, cur, b);
    }
    return out;
}

}  // namespace polycert
