#ifndef POLYCERT_TORSION_HPP
#define POLYCERT_TORSION_HPP

// Certificate pipelines for p-torsion-freeness: the coefficient hypothesis
// on the collapsed facet, prime-clean retractions, contraction factors
// along induced retractions, and per-prime scans. A certificate either
// concludes no-p-torsion with replayable evidence or stays inconclusive;
// it never claims torsion exists.

#include <map>

#include "polycert/constructions.hpp"
#include "polycert/retraction.hpp"

namespace polycert {

struct RationalCombination {
    int target_facet = -1;
    std::vector<int> combo_facets;  // zero-coefficient facets dropped
    std::vector<Rat> coeffs;        // lowest terms, aligned with the facets
};

struct A2Result {
    bool pass = false;
    std::optional<RationalCombination> combo;
    std::string reason;  // empty on pass
};

// Is the collapsed facet's vector a rational combination of the base facet
// vectors with every coefficient denominator coprime to the prime? Pure
// linear algebra: no validity requirement on the pair.
A2Result check_A2(const CombinatorialPolytope& p, const CharMap& lambda,
                  int big_facet, const ProductStructure& ps, const Int& prime);

enum class Conclusion { no_p_torsion, inconclusive };

struct TorsionCertificate {
    Int prime = 0;
    std::string kind;  // "plain" | "blowdown" | "2-wedge"
    // evidence sequence with its trace: on the polytope itself for plain,
    // on the collapsed polytope for blowdown, on the wedge for 2-wedge
    std::optional<RetractionSequence> sequence;
    std::vector<Int> trace;
    // the prime-clean input sequence the evidence was derived from
    // (blowdown and 2-wedge kinds)
    std::optional<RetractionSequence> source_sequence;
    std::vector<Int> source_trace;
    std::optional<A2Result> a2;
    std::map<int, Int> d_values;  // evidence step -> contraction factor
    Conclusion conclusion = Conclusion::inconclusive;
    std::string reason;  // narrative for inconclusive results
};

// Prime-clean retraction of (p, lambda) itself.
TorsionCertificate check_plain(const CombinatorialPolytope& p,
                               const CharMap& lambda, const Int& prime);

// Full pipeline for the blowdown of big_facet onto base: validity, product
// structure, coefficient hypothesis, a prime-clean retraction of p, the
// induced retraction with its contraction factors, and the induced trace.
// Retries across prime-clean retractions with different initial vertices
// before giving up. A no-p-torsion conclusion is about the collapsed pair.
TorsionCertificate blowdown_torsion_check(const CombinatorialPolytope& p,
                                          const CharMap& lambda,
                                          int big_facet, const Face& base,
                                          const Int& prime);

// 2-wedge pipeline at a facet: requires a != 1 (throws) and
// gcd(|1 - a|, prime) = 1 (inconclusive otherwise); searches for a
// prime-clean retraction keeping the facet's vertices last and expands it
// onto the wedge.
TorsionCertificate kwedge_torsion_check(const CombinatorialPolytope& p,
                                        const CharMap& lambda, int facet,
                                        const Int& a, const Int& prime);

struct PrimeScanReport {
    std::vector<Int> primes;  // the relevant primes, ascending
    std::map<Int, TorsionCertificate> certificates;
    bool torsion_free = false;
    std::string prime_set_note;  // why the prime set is exhaustive
    std::string reason;          // populated when not torsion_free
};

// Plain scan: relevant primes are those dividing some vertex order;
// certifies each with check_plain.
PrimeScanReport all_prime_scan(const CombinatorialPolytope& p,
                               const CharMap& lambda);

// Blowdown scan: relevant primes divide some vertex order of either pair,
// some coefficient numerator or denominator, or some contraction factor of
// a reference induced retraction; certifies each with
// blowdown_torsion_check.
PrimeScanReport all_prime_scan(const CombinatorialPolytope& p,
                               const CharMap& lambda, int big_facet,
                               const Face& base);

// Independent replays: re-derive every trace entry, coefficient identity,
// contraction factor, and gcd from the certificate's raw data; throw
// polytope_error on any disagreement. Inconclusive certificates have
// nothing to verify and pass vacuously.
void verify_certificate(const CombinatorialPolytope& p, const CharMap& lambda,
                        const TorsionCertificate& cert);
void verify_certificate(const CombinatorialPolytope& p, const CharMap& lambda,
                        int big_facet, const Face& base,
                        const TorsionCertificate& cert);
void verify_certificate(const CombinatorialPolytope& p, const CharMap& lambda,
                        int facet, const Int& a,
                        const TorsionCertificate& cert);

}  // namespace polycert

#endif
