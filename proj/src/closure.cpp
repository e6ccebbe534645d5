#include "tracforge/closure.hpp"

#include <algorithm>
#include <numeric>

namespace tracforge {

namespace {

// lcm of denominators over gcd of numerators, sign fixed on the leading term
Polynomial integer_clear(const Polynomial& p) {
    if (p.is_zero() || p.ring()->field().is_prime_field()) return p;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const Term& t : p.terms()) {
        const Rational& q = std::get<Rational>(t.coef);
        den_lcm = lcm(den_lcm, denominator(q));
        num_gcd = gcd(num_gcd, numerator(q));
    }
    if (num_gcd == 0) num_gcd = 1;
    Rational factor(den_lcm, num_gcd);
    if (std::get<Rational>(p.leading().coef) < 0) factor = -factor;
    return poly_scale(p, Scalar(factor));
}

Polynomial display_normalize(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (p.ring()->field().is_prime_field()) return poly_monic(p);
    return integer_clear(p);
}

} // namespace

std::string ClosureReport::canonical_text() const {
    std::string s;
    s += "ring " + ring_header + "\n";
    s += "op " + op + "\n";
    if (label == "gens") {
        s += "gens (";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) s += ", ";
            s += gens[i];
        }
        s += ")\n";
    } else if (label == "value") {
        s += "value " + (gens.empty() ? std::string() : gens[0]) + "\n";
    } else {
        for (const auto& g : gens) s += label + " " + g + "\n";
    }
    s += "path " + path + "\n";
    return s;
}

std::vector<std::string> canonical_generator_strings(const Submodule& U) {
    std::vector<FreeVector> rows = U.canonical_generators();
    std::reverse(rows.begin(), rows.end()); // descending by leading term
    std::vector<std::string> out;
    for (const auto& row : rows) {
        if (U.rank() == 1) {
            out.push_back(to_string(display_normalize(row[0])));
        } else {
            std::string s = "[";
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) s += ", ";
                s += to_string(row[i]);
            }
            s += "]";
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::string canonical_ideal_string(const Ideal& I) {
    auto gens = canonical_generator_strings(I);
    if (gens.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += gens[i];
    }
    return s + ")";
}

Submodule trace_module(const FPModule& B, const FPModule& A) {
    if (B.ring() != A.ring()) throw std::invalid_argument("ring mismatch");
    HomResult h = hom(B, A);
    std::vector<FreeVector> images;
    for (const auto& H : h.generators) {
        for (int j = 0; j < B.rank(); ++j) {
            FreeVector col = H.column(j);
            if (!fv_is_zero(col)) images.push_back(std::move(col));
        }
    }
    return Submodule(A.ring(), A.rank(), std::move(images));
}

Ideal trace_ideal(const FPModule& B) {
    Submodule K = hom_into_ring(B);
    std::vector<Polynomial> entries;
    for (const auto& row : K.canonical_generators()) {
        for (const auto& p : row)
            if (!p.is_zero()) entries.push_back(p);
    }
    return Submodule::ideal(B.ring(), std::move(entries));
}

Ideal closure_of_ideal(const Ideal& I, const FPModule& B) {
    if (I.ring() != B.ring()) throw std::invalid_argument("ring mismatch");
    if (I.rank() != 1) throw std::invalid_argument("closure_of_ideal needs an ideal");
    const PolyRingPtr& base = B.ring()->base();
    std::vector<FreeVector> rels = B.relations();
    for (const auto& g : I.gens()) {
        for (int i = 0; i < B.rank(); ++i) {
            FreeVector v = fv_zero(base, B.rank());
            v[i] = g[0];
            rels.push_back(std::move(v));
        }
    }
    return annihilator(B.rank(), Submodule(B.ring(), B.rank(), std::move(rels)));
}

Submodule closure_of_submodule(const Submodule& N, const FPModule& M, const FPModule& B) {
    if (N.ring() != M.ring() || M.ring() != B.ring())
        throw std::invalid_argument("ring mismatch");
    if (N.rank() != M.rank()) throw std::invalid_argument("N must live in M's free cover");
    const QRingPtr& ring = M.ring();
    const PolyRingPtr& base = ring->base();
    int m = M.rank(), g = B.rank();

    std::vector<FreeVector> q_rels = M.relations();
    for (const auto& n : N.gens()) q_rels.push_back(n);
    FPModule Q(ring, m, std::move(q_rels));
    FPModule BQ = tensor(B, Q); // rank g*m, (i,j) -> i*m + j

    int copy_rank = BQ.rank();
    int target = g * copy_rank;
    // u -> (b_i (x) u)_i, one block per generator of B
    std::vector<FreeVector> cols;
    for (int j = 0; j < m; ++j) {
        FreeVector v = fv_zero(base, target);
        for (int i = 0; i < g; ++i) v[i * copy_rank + (i * m + j)] = poly_from_int(base, 1);
        cols.push_back(std::move(v));
    }
    for (int i = 0; i < g; ++i) {
        for (const auto& r : BQ.relations()) {
            FreeVector v = fv_zero(base, target);
            for (int s = 0; s < copy_rank; ++s) v[i * copy_rank + s] = r[s];
            cols.push_back(std::move(v));
        }
    }
    auto rows = projected_syzygy_rows(ring, target, cols, m);
    return Submodule(ring, m, std::move(rows));
}

Ideal family_test_ideal(const QRingPtr& ring, const std::vector<FPModule>& family,
                        bool* empty_family) {
    if (empty_family) *empty_family = family.empty();
    if (family.empty()) return Submodule::unit_ideal(ring);
    Ideal acc = trace_ideal(family[0]);
    for (std::size_t i = 1; i < family.size(); ++i)
        acc = intersect(acc, trace_ideal(family[i]));
    return acc;
}

bool generates(const FPModule& B, const FPModule& D) {
    if (B.ring() != D.ring()) throw std::invalid_argument("ring mismatch");
    Submodule tr = trace_module(B, D);
    std::vector<FreeVector> gens = tr.gens();
    for (const auto& r : D.relations()) gens.push_back(r);
    Submodule span(D.ring(), D.rank(), std::move(gens));
    for (int i = 0; i < D.rank(); ++i)
        if (!span.contains(fv_basis(D.ring()->base(), D.rank(), i))) return false;
    return true;
}

bool has_free_summand(const FPModule& B) { return trace_ideal(B).is_unit_ideal(); }

Ideal socle(const QRingPtr& ring) {
    Ideal acc = Submodule::unit_ideal(ring);
    bool first = true;
    for (int v = 0; v < ring->base()->nvars(); ++v) {
        Ideal c = colon(Submodule::zero_ideal(ring), poly_var(ring->base(), v));
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

bool is_m_primary(const Ideal& J) {
    if (J.is_unit_ideal()) throw std::invalid_argument("is_m_primary: unit ideal");
    return dimension_is_zero(J);
}

SingularWitness singular_containment_check(const FPModule& B) {
    const QRingPtr& ring = B.ring();
    if (ring->defining().size() > 1)
        throw std::invalid_argument("singular_containment_check supports hypersurfaces only");
    const PolyRingPtr& base = ring->base();
    Polynomial f = ring->defining().empty() ? poly_zero(base) : ring->defining()[0];

    std::vector<Polynomial> jacobian{f};
    for (int v = 0; v < base->nvars(); ++v) jacobian.push_back(partial_derivative(f, v));

    Ideal tau = trace_ideal(B);
    SingularWitness w;
    for (const auto& g : jacobian) {
        if (g.is_zero()) continue;
        if (!radical_membership(g, tau)) {
            w.ok = false;
            w.failed.push_back(to_string(g));
        }
    }
    return w;
}

bool colon_capturing_check(const FPModule& B, const std::vector<Polynomial>& sop) {
    const QRingPtr& ring = B.ring();
    for (std::size_t k = 0; k < sop.size(); ++k) {
        std::vector<Polynomial> prefix(sop.begin(), sop.begin() + static_cast<long>(k));
        Ideal I = Submodule::ideal(ring, prefix);
        Ideal lhs = colon(I, sop[k]);
        Ideal rhs = closure_of_ideal(I, B);
        if (!rhs.contains(lhs)) return false;
    }
    return true;
}

} // namespace tracforge
