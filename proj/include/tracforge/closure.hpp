#pragma once

#include "tracforge/fpmodule.hpp"

#include <string>
#include <vector>

namespace tracforge {

/// Result record for closure/trace computations: canonical generators plus
/// the computation path taken. `millis` is informational and never part of
/// the canonical text, which must stay byte-stable for corpus diffing.
struct ClosureReport {
    std::string ring_header;
    std::string op;
    std::string label = "gens"; // "gens" | "value" | "matrix"
    std::vector<std::string> gens;
    std::string path;
    double millis = 0.0;

    std::string canonical_text() const;
};

/// Canonical generator strings of an ideal or submodule: reduced basis rows
/// outside the defining block, sorted descending by leading term, monic over
/// GF(p) and integer-cleared over QQ.
std::vector<std::string> canonical_generator_strings(const Submodule& U);
std::string canonical_ideal_string(const Ideal& I);

/// Submodule of A generated by the images of every Hom(B,A) generator
/// applied to the standard generators of B.
Submodule trace_module(const FPModule& B, const FPModule& A);

/// Ideal generated by the coordinate entries of the Hom(B,R) generators;
/// for finitely presented B this is the test ideal of the module closure.
Ideal trace_ideal(const FPModule& B);
inline Ideal test_ideal(const FPModule& B) { return trace_ideal(B); }

/// (IB :_R B), the closure of I under the module closure of B, computed as
/// the annihilator of B/IB.
Ideal closure_of_ideal(const Ideal& I, const FPModule& B);

/// Closure of N inside M: preimage of the kernel of M/N -> (B (x) M/N)^{b_B},
/// u -> (b_i (x) u). N is given by generators inside M's free cover.
Submodule closure_of_submodule(const Submodule& N, const FPModule& M, const FPModule& B);

/// Intersection of the member trace ideals; the empty family yields the unit
/// ideal and sets *empty_family when provided.
Ideal family_test_ideal(const QRingPtr& ring, const std::vector<FPModule>& family,
                        bool* empty_family = nullptr);

/// True iff some finite direct sum of copies of B surjects onto D,
/// equivalently the trace of B in D is all of D.
bool generates(const FPModule& B, const FPModule& D);

/// trace_ideal(B) = (1); in the graded-local model this detects free summands.
bool has_free_summand(const FPModule& B);

/// (0 :_R m) as an ideal of R.
Ideal socle(const QRingPtr& ring);

/// Krull dimension zero test for a proper ideal; throws on the unit ideal.
bool is_m_primary(const Ideal& J);

struct SingularWitness {
    bool ok = true;
    std::vector<std::string> failed; // Jacobian generators outside the radical
};

/// Checks that every Jacobian generator of the hypersurface lies in the
/// radical of trace_ideal(B) + (f). Requires a hypersurface (or free) ring.
SingularWitness singular_containment_check(const FPModule& B);

/// (x_1..x_k) : x_{k+1} is contained in the closure of (x_1..x_k) for every
/// prefix of the given partial system of parameters.
bool colon_capturing_check(const FPModule& B, const std::vector<Polynomial>& sop);

} // namespace tracforge
