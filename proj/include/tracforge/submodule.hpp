#pragma once

#include "tracforge/groebner.hpp"
#include "tracforge/matrix.hpp"
#include "tracforge/quotient.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace tracforge {

/// Finitely generated submodule of a free module R^b over a quotient ring.
/// Ideals are the b = 1 case. Groebner data is computed lazily in the ambient
/// polynomial ring with the generators augmented by g*e_i for every defining
/// basis element g; the cache is write-once, so shared readers are safe.
class Submodule {
public:
    Submodule(QRingPtr ring, int rank, std::vector<FreeVector> gens);

    static Submodule ideal(QRingPtr ring, std::vector<Polynomial> gens);
    static Submodule zero_ideal(QRingPtr ring);
    static Submodule unit_ideal(QRingPtr ring);
    static Submodule zero(QRingPtr ring, int rank);

    const QRingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<FreeVector>& gens() const { return gens_; }
    std::vector<Polynomial> ideal_gens() const; // rank-1 view of gens

    /// Reduced Groebner basis of the lifted module (generators + defining
    /// multiples), as vectors over the ambient polynomial ring.
    const std::vector<FreeVector>& reduced_basis() const;
    /// reduced_basis() minus the rows lying in J*R^b: a canonical generating
    /// set of the submodule over the quotient ring.
    std::vector<FreeVector> canonical_generators() const;

    FreeVector normal_form(const FreeVector& v) const;
    Polynomial normal_form(const Polynomial& p) const; // rank-1
    bool contains(const FreeVector& v) const;
    bool contains(const Polynomial& p) const; // rank-1
    bool contains(const Submodule& other) const;
    bool equals(const Submodule& other) const;
    bool is_zero_module() const;
    bool is_unit_ideal() const; // rank-1

    /// Groebner data over the augmented inputs; traced form carries the
    /// transformation rows used by syzygies.
    const gb::GBResult& groebner(bool with_trace = false) const;
    std::vector<gb::VecPoly> augmented_inputs() const;

private:
    QRingPtr ring_;
    int rank_;
    std::vector<FreeVector> gens_;

    struct Cache {
        std::mutex mu;
        std::shared_ptr<const gb::GBResult> plain;
        std::shared_ptr<const gb::GBResult> traced;
        std::shared_ptr<const std::vector<FreeVector>> basis_vectors;
    };
    std::shared_ptr<Cache> cache_;
};

using Ideal = Submodule;

// conversions between the engine representation and polynomial vectors
gb::VecPoly to_vecpoly(const FreeVector& v);
gb::VecPoly to_vecpoly(const Polynomial& p);
FreeVector from_vecpoly(const PolyRingPtr& ring, int rank, const gb::VecPoly& v);
gb::Context engine_context(const QRingPtr& ring);

/// Generators of { (r_1..r_keep) : sum r_i cols_i in span(cols_{keep+1..}) + J*R^b },
/// i.e. syzygies of (cols ++ defining block) truncated to the first `keep`
/// coordinates. The workhorse behind syzygies, kernels, colons and Hom.
std::vector<std::vector<Polynomial>> projected_syzygy_rows(const QRingPtr& ring, int ambient_rank,
                                                           const std::vector<FreeVector>& cols,
                                                           int keep);

/// Kernel of R^g -> R^b, e_i -> gens_i, as a submodule of R^g.
Submodule syzygies(const Submodule& gens);

/// Kernel of the map R^cols -> R^rows given by A.
Submodule kernel_of_matrix(const QRingPtr& ring, const PolyMatrix& A);

Submodule intersect(const Submodule& U, const Submodule& V);

/// { r in R : r*v in U }.
Ideal colon(const Submodule& U, const FreeVector& v);
Ideal colon(const Ideal& I, const Polynomial& f);

/// Annihilator of the module presented by rank b with relation module W.
Ideal annihilator(int rank, const Submodule& W);

/// I intersected with the subring generated by the kept variables.
Ideal eliminate(const Ideal& I, const std::vector<int>& keep_vars);

/// True iff f lies in the radical of I (Rabinowitsch: 1 in (I, 1 - t*f)).
bool radical_membership(const Polynomial& f, const Ideal& I);

/// Dimension of the quotient by I (leading-term ideal, maximal independent
/// variable sets). Throws std::invalid_argument on the unit ideal.
int krull_dimension(const Ideal& I);
bool dimension_is_zero(const Ideal& I);

} // namespace tracforge
