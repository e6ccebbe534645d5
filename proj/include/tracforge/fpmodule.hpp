#pragma once

#include "tracforge/submodule.hpp"

#include <optional>
#include <vector>

namespace tracforge {

/// Finitely presented module over a quotient ring: the cokernel of the
/// relation matrix R^r -> R^b whose columns are the relations. Grading
/// shifts are inferred from the ring weights when the relations are
/// homogeneous.
class FPModule {
public:
    FPModule(QRingPtr ring, int rank, std::vector<FreeVector> relations);

    static FPModule free_module(QRingPtr ring, int rank);
    static FPModule from_cokernel(const QRingPtr& ring, const PolyMatrix& A);
    static FPModule from_submodule(const Submodule& gens);
    static FPModule residue_field(const QRingPtr& ring); // R / (variables)

    const QRingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<FreeVector>& relations() const { return relations_; }
    PolyMatrix relation_matrix() const;
    Submodule relation_submodule() const;
    const std::optional<std::vector<std::int64_t>>& shifts() const { return shifts_; }

private:
    QRingPtr ring_;
    int rank_;
    std::vector<FreeVector> relations_;
    std::optional<std::vector<std::int64_t>> shifts_;
};

bool is_zero(const FPModule& M);

FPModule direct_sum(const FPModule& M, const FPModule& N);
/// Rank b_M*b_N; relations rel_M (x) e_j and e_i (x) rel_N.
/// Position (i, j) flattens to i*b_N + j.
FPModule tensor(const FPModule& M, const FPModule& N);

/// Map of presented modules; the matrix must carry source relations into the
/// target relation submodule (checked at construction).
struct ModuleMap {
    FPModule source;
    FPModule target;
    PolyMatrix matrix; // b_target x b_source

    ModuleMap(FPModule src, FPModule tgt, PolyMatrix m);
};

FPModule kernel(const ModuleMap& f);
FPModule cokernel(const ModuleMap& f);

/// A submodule of a presented module, presented on its own generators
/// together with the inclusion into the ambient free cover.
struct SubPresentation {
    FPModule module;
    PolyMatrix inclusion; // b_ambient x #gens
};

SubPresentation image(const ModuleMap& f);
SubPresentation present_submodule(const FPModule& ambient, const std::vector<FreeVector>& gens);

/// Hom_R(M, N) with evaluation data: generator l acts on M's free cover by
/// the b_N x b_M matrix generators[l].
struct HomResult {
    FPModule module;
    std::vector<PolyMatrix> generators;
};

HomResult hom(const FPModule& M, const FPModule& N);

/// Fast route for Hom(M, R): the kernel of the transposed presentation,
/// as a submodule of R^{b_M}. Must agree with hom(M, free rank 1).
Submodule hom_into_ring(const FPModule& M);

FPModule ext1(const FPModule& M, const FPModule& N);

struct FreeResolution {
    int f0_rank = 0;
    std::vector<PolyMatrix> diffs; // diffs[k] : F_{k+1} -> F_k
    bool minimal = false;
    std::vector<int> ranks() const;
};

/// Resolves by iterated syzygies with irredundant generating sets; minimal
/// for graded presentations.
FreeResolution free_resolution(const FPModule& M, int length);

/// Prunes nonzero-constant entries of the presentation by row/column
/// elimination; for graded presentations the result is a minimal
/// presentation of the same module.
FPModule minimalize(const FPModule& M);

/// Image of the n-th differential of a minimal free resolution of the
/// residue field, presented on its generating columns.
FPModule syzygy_of_residue_field(const QRingPtr& ring, int n);

/// Drops redundant generators (membership in the span of the others);
/// minimal generating set in the graded case.
std::vector<FreeVector> irredundant_generators(const QRingPtr& ring, int rank,
                                               std::vector<FreeVector> gens);

} // namespace tracforge
