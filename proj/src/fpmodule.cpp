#include "tracforge/fpmodule.hpp"

#include <algorithm>

namespace tracforge {

namespace {

// Solve deg(A_ij) + r_i = c_j over the bipartite row/column graph; nullopt if
// some entry is inhomogeneous or the constraints clash.
std::optional<std::vector<std::int64_t>> infer_shifts(const QRingPtr& ring, int rank,
                                                      const std::vector<FreeVector>& relations) {
    const auto& w = ring->base()->weights();
    std::vector<std::optional<std::int64_t>> row(rank), col(relations.size());
    auto entry_degree = [&](const Polynomial& p) -> std::optional<std::int64_t> {
        if (p.is_zero()) return std::nullopt; // unconstrained
        std::int64_t d = weighted_degree(p.terms()[0].exp, w);
        for (const Term& t : p.terms())
            if (weighted_degree(t.exp, w) != d) return std::nullopt;
        return d;
    };
    for (const auto& rel : relations)
        for (const auto& p : rel)
            if (!p.is_zero() && !entry_degree(p)) return std::nullopt;

    // propagate until stable (graphs are tiny)
    bool changed = true;
    if (rank > 0 && !relations.empty()) {
        for (int pass = 0; pass < rank + static_cast<int>(relations.size()) + 2 && changed; ++pass) {
            changed = false;
            for (std::size_t j = 0; j < relations.size(); ++j) {
                for (int i = 0; i < rank; ++i) {
                    auto d = entry_degree(relations[j][i]);
                    if (!d) continue;
                    if (row[i] && !col[j]) {
                        col[j] = *row[i] + *d;
                        changed = true;
                    } else if (col[j] && !row[i]) {
                        row[i] = *col[j] - *d;
                        changed = true;
                    } else if (!row[i] && !col[j]) {
                        row[i] = 0;
                        col[j] = *d;
                        changed = true;
                    } else if (*col[j] - *row[i] != *d) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    std::vector<std::int64_t> out(rank, 0);
    for (int i = 0; i < rank; ++i)
        if (row[i]) out[i] = *row[i];
    return out;
}

} // namespace

FPModule::FPModule(QRingPtr ring, int rank, std::vector<FreeVector> relations)
    : ring_(std::move(ring)), rank_(rank), relations_(std::move(relations)) {
    if (rank_ < 0) throw std::invalid_argument("negative rank");
    for (const auto& rel : relations_)
        if (static_cast<int>(rel.size()) != rank_)
            throw std::invalid_argument("relation rank mismatch");
    shifts_ = infer_shifts(ring_, rank_, relations_);
}

FPModule FPModule::free_module(QRingPtr ring, int rank) { return FPModule(std::move(ring), rank, {}); }

FPModule FPModule::from_cokernel(const QRingPtr& ring, const PolyMatrix& A) {
    return FPModule(ring, A.rows(), A.columns());
}

FPModule FPModule::from_submodule(const Submodule& gens) {
    Submodule syz = syzygies(gens);
    return FPModule(gens.ring(), static_cast<int>(gens.gens().size()),
                    syz.canonical_generators());
}

FPModule FPModule::residue_field(const QRingPtr& ring) {
    std::vector<FreeVector> rels;
    for (int v = 0; v < ring->base()->nvars(); ++v)
        rels.push_back(FreeVector{poly_var(ring->base(), v)});
    return FPModule(ring, 1, std::move(rels));
}

PolyMatrix FPModule::relation_matrix() const {
    return PolyMatrix::from_columns(ring_->base(), rank_, relations_);
}

Submodule FPModule::relation_submodule() const { return Submodule(ring_, rank_, relations_); }

bool is_zero(const FPModule& M) {
    if (M.rank() == 0) return true;
    Submodule rel = M.relation_submodule();
    for (int i = 0; i < M.rank(); ++i)
        if (!rel.contains(fv_basis(M.ring()->base(), M.rank(), i))) return false;
    return true;
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
    if (M.ring() != N.ring()) throw std::invalid_argument("ring mismatch");
    const PolyRingPtr& base = M.ring()->base();
    int rank = M.rank() + N.rank();
    std::vector<FreeVector> rels;
    for (const auto& r : M.relations()) {
        FreeVector v = r;
        for (int i = 0; i < N.rank(); ++i) v.push_back(poly_zero(base));
        rels.push_back(std::move(v));
    }
    for (const auto& r : N.relations()) {
        FreeVector v = fv_zero(base, M.rank());
        for (const auto& p : r) v.push_back(p);
        rels.push_back(std::move(v));
    }
    return FPModule(M.ring(), rank, std::move(rels));
}

FPModule tensor(const FPModule& M, const FPModule& N) {
    if (M.ring() != N.ring()) throw std::invalid_argument("ring mismatch");
    const PolyRingPtr& base = M.ring()->base();
    int bM = M.rank(), bN = N.rank();
    int rank = bM * bN;
    auto flat = [&](int i, int j) { return i * bN + j; };
    std::vector<FreeVector> rels;
    for (const auto& r : M.relations()) {
        for (int j = 0; j < bN; ++j) {
            FreeVector v = fv_zero(base, rank);
            for (int i = 0; i < bM; ++i) v[flat(i, j)] = r[i];
            rels.push_back(std::move(v));
        }
    }
    for (const auto& s : N.relations()) {
        for (int i = 0; i < bM; ++i) {
            FreeVector v = fv_zero(base, rank);
            for (int j = 0; j < bN; ++j) v[flat(i, j)] = s[j];
            rels.push_back(std::move(v));
        }
    }
    return FPModule(M.ring(), rank, std::move(rels));
}

ModuleMap::ModuleMap(FPModule src, FPModule tgt, PolyMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (source.ring() != target.ring()) throw std::invalid_argument("ring mismatch");
    if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
        throw std::invalid_argument("map matrix shape mismatch");
    Submodule rel = target.relation_submodule();
    for (const auto& r : source.relations())
        if (!rel.contains(matrix.apply(r)))
            throw std::invalid_argument("matrix does not carry source relations into target relations");
}

FPModule kernel(const ModuleMap& f) {
    const QRingPtr& ring = f.source.ring();
    std::vector<FreeVector> cols = f.matrix.columns();
    for (const auto& r : f.target.relations()) cols.push_back(r);
    auto kgens = projected_syzygy_rows(ring, f.target.rank(), cols, f.source.rank());
    kgens = irredundant_generators(ring, f.source.rank(), std::move(kgens));

    std::vector<FreeVector> cols2 = kgens;
    for (const auto& r : f.source.relations()) cols2.push_back(r);
    auto rels = projected_syzygy_rows(ring, f.source.rank(), cols2, static_cast<int>(kgens.size()));
    return FPModule(ring, static_cast<int>(kgens.size()), std::move(rels));
}

FPModule cokernel(const ModuleMap& f) {
    std::vector<FreeVector> rels = f.target.relations();
    for (const auto& c : f.matrix.columns()) rels.push_back(c);
    return FPModule(f.target.ring(), f.target.rank(), std::move(rels));
}

SubPresentation present_submodule(const FPModule& ambient, const std::vector<FreeVector>& gens) {
    const QRingPtr& ring = ambient.ring();
    std::vector<FreeVector> cols = gens;
    for (const auto& r : ambient.relations()) cols.push_back(r);
    auto rels = projected_syzygy_rows(ring, ambient.rank(), cols, static_cast<int>(gens.size()));
    FPModule mod(ring, static_cast<int>(gens.size()), std::move(rels));
    return SubPresentation{std::move(mod),
                           PolyMatrix::from_columns(ring->base(), ambient.rank(), gens)};
}

SubPresentation image(const ModuleMap& f) { return present_submodule(f.target, f.matrix.columns()); }

namespace {

// Kernel of Hom(free cover, N) -> Hom(source of `inner`, N), phi -> phi*inner,
// inside R^{bN*inner_cols_ambient}. See hom() and ext1() for the two callers.
std::vector<FreeVector> hom_kernel_gens(const QRingPtr& ring, int bN,
                                        const std::vector<FreeVector>& n_relations,
                                        const PolyMatrix& inner) {
    const PolyRingPtr& base = ring->base();
    int cover = inner.rows(); // rank of the free module the maps act on
    int target_cols = inner.cols();
    int flat_rank = bN * cover;
    if (target_cols == 0) {
        std::vector<FreeVector> all;
        for (int idx = 0; idx < flat_rank; ++idx) all.push_back(fv_basis(base, flat_rank, idx));
        return all;
    }
    int flat_target = bN * target_cols;
    std::vector<FreeVector> cols;
    // columns of phi -> phi*inner for the unit matrices E_{i,j}
    for (int j = 0; j < cover; ++j) {
        for (int i = 0; i < bN; ++i) {
            FreeVector v = fv_zero(base, flat_target);
            for (int c = 0; c < target_cols; ++c) v[c * bN + i] = inner.at(j, c);
            cols.push_back(std::move(v));
        }
    }
    // target relations, one block per column of `inner`
    for (int c = 0; c < target_cols; ++c) {
        for (const auto& w : n_relations) {
            FreeVector v = fv_zero(base, flat_target);
            for (int i = 0; i < bN; ++i) v[c * bN + i] = w[i];
            cols.push_back(std::move(v));
        }
    }
    return projected_syzygy_rows(ring, flat_target, cols, flat_rank);
}

// Quotient presentation of span(z_gens) / span(b_gens) inside R^flat_rank.
FPModule quotient_presentation(const QRingPtr& ring, int flat_rank,
                               const std::vector<FreeVector>& z_gens,
                               const std::vector<FreeVector>& b_gens) {
    std::vector<FreeVector> cols = z_gens;
    for (const auto& b : b_gens) cols.push_back(b);
    auto rels = projected_syzygy_rows(ring, flat_rank, cols, static_cast<int>(z_gens.size()));
    return FPModule(ring, static_cast<int>(z_gens.size()), std::move(rels));
}

} // namespace

HomResult hom(const FPModule& M, const FPModule& N) {
    if (M.ring() != N.ring()) throw std::invalid_argument("ring mismatch");
    const QRingPtr& ring = M.ring();
    const PolyRingPtr& base = ring->base();
    int bM = M.rank(), bN = N.rank();
    int flat_rank = bN * bM; // phi_{i,j} at j*bN + i

    std::vector<FreeVector> z_gens =
        hom_kernel_gens(ring, bN, N.relations(), M.relation_matrix());
    z_gens = irredundant_generators(ring, flat_rank, std::move(z_gens));
    // scale each generator monic in the flattened order; a unit multiple is
    // the same homomorphism and prints the way the maps are usually tabulated
    {
        gb::Context ctx = engine_context(ring);
        for (auto& z : z_gens) {
            gb::VecPoly v = to_vecpoly(z);
            gb::normalize(ctx, v);
            if (!v.empty()) z = from_vecpoly(base, flat_rank, gb::monic(ctx, v));
        }
    }

    std::vector<FreeVector> b_gens;
    for (int j = 0; j < bM; ++j) {
        for (const auto& w : N.relations()) {
            FreeVector v = fv_zero(base, flat_rank);
            for (int i = 0; i < bN; ++i) v[j * bN + i] = w[i];
            b_gens.push_back(std::move(v));
        }
    }
    FPModule module = quotient_presentation(ring, flat_rank, z_gens, b_gens);

    std::vector<PolyMatrix> mats;
    for (const auto& z : z_gens) {
        PolyMatrix m(base, bN, bM);
        for (int j = 0; j < bM; ++j)
            for (int i = 0; i < bN; ++i) m.at(i, j) = z[j * bN + i];
        mats.push_back(std::move(m));
    }
    return HomResult{std::move(module), std::move(mats)};
}

Submodule hom_into_ring(const FPModule& M) {
    if (M.relations().empty()) {
        std::vector<FreeVector> all;
        for (int i = 0; i < M.rank(); ++i)
            all.push_back(fv_basis(M.ring()->base(), M.rank(), i));
        return Submodule(M.ring(), M.rank(), std::move(all));
    }
    return kernel_of_matrix(M.ring(), M.relation_matrix().transposed());
}

FPModule ext1(const FPModule& M, const FPModule& N) {
    if (M.ring() != N.ring()) throw std::invalid_argument("ring mismatch");
    const QRingPtr& ring = M.ring();
    const PolyRingPtr& base = ring->base();
    int bN = N.rank();

    std::vector<FreeVector> d1_cols =
        irredundant_generators(ring, M.rank(), M.relations());
    int r1 = static_cast<int>(d1_cols.size());
    if (r1 == 0) return FPModule(ring, 0, {}); // free modules have no Ext^1

    Submodule d1_sub(ring, M.rank(), d1_cols);
    std::vector<FreeVector> d2_cols =
        irredundant_generators(ring, r1, syzygies(d1_sub).canonical_generators());
    PolyMatrix d2 = PolyMatrix::from_columns(base, r1, d2_cols);

    std::vector<FreeVector> z_gens = hom_kernel_gens(ring, bN, N.relations(), d2);
    z_gens = irredundant_generators(ring, bN * r1, std::move(z_gens));

    PolyMatrix d1 = PolyMatrix::from_columns(base, M.rank(), d1_cols);
    std::vector<FreeVector> b_gens;
    for (int k = 0; k < M.rank(); ++k) { // images of Hom(F0, N): E_{i,k} * d1
        for (int i = 0; i < bN; ++i) {
            FreeVector v = fv_zero(base, bN * r1);
            for (int c = 0; c < r1; ++c) v[c * bN + i] = d1.at(k, c);
            b_gens.push_back(std::move(v));
        }
    }
    for (int c = 0; c < r1; ++c) { // maps into the relations of N
        for (const auto& w : N.relations()) {
            FreeVector v = fv_zero(base, bN * r1);
            for (int i = 0; i < bN; ++i) v[c * bN + i] = w[i];
            b_gens.push_back(std::move(v));
        }
    }
    return quotient_presentation(ring, bN * r1, z_gens, b_gens);
}

std::vector<FreeVector> irredundant_generators(const QRingPtr& ring, int rank,
                                               std::vector<FreeVector> gens) {
    // drop literal zeros, then anything in the span of the rest
    std::vector<FreeVector> live;
    for (auto& g : gens)
        if (!fv_is_zero(g)) live.push_back(std::move(g));
    for (std::size_t i = 0; i < live.size();) {
        std::vector<FreeVector> others;
        for (std::size_t j = 0; j < live.size(); ++j)
            if (j != i) others.push_back(live[j]);
        Submodule span(ring, rank, others);
        if (span.contains(live[i])) {
            live.erase(live.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    return live;
}

std::vector<int> FreeResolution::ranks() const {
    std::vector<int> r{f0_rank};
    for (const auto& d : diffs) r.push_back(d.cols());
    return r;
}

FreeResolution free_resolution(const FPModule& M, int length) {
    const QRingPtr& ring = M.ring();
    const PolyRingPtr& base = ring->base();
    FreeResolution res;
    res.f0_rank = M.rank();

    std::vector<FreeVector> cols = irredundant_generators(ring, M.rank(), M.relations());
    int ambient = M.rank();
    for (int step = 1; step <= length; ++step) {
        if (cols.empty()) break;
        res.diffs.push_back(PolyMatrix::from_columns(base, ambient, cols));
        if (step == length) break;
        Submodule sub(ring, ambient, cols);
        ambient = static_cast<int>(cols.size());
        cols = irredundant_generators(ring, ambient, syzygies(sub).canonical_generators());
    }
    res.minimal = true;
    for (const auto& d : res.diffs) {
        int r, c;
        if (d.find_unit_entry(r, c)) res.minimal = false;
    }
    return res;
}

FPModule minimalize(const FPModule& M) {
    PolyMatrix A = M.relation_matrix();
    const Field& F = M.ring()->base()->field();
    for (;;) {
        // drop zero columns
        std::vector<FreeVector> cols;
        for (int c = 0; c < A.cols(); ++c)
            if (!fv_is_zero(A.column(c))) cols.push_back(A.column(c));
        A = PolyMatrix::from_columns(M.ring()->base(), A.rows(), cols);

        int r, c;
        if (!A.find_unit_entry(r, c)) break;
        Scalar u = A.at(r, c).leading().coef;
        for (int i = 0; i < A.rows(); ++i)
            A.at(i, c) = poly_scale(A.at(i, c), F.inv(u));
        for (int j = 0; j < A.cols(); ++j) {
            if (j == c) continue;
            Polynomial factor = A.at(r, j);
            if (factor.is_zero()) continue;
            for (int i = 0; i < A.rows(); ++i)
                A.at(i, j) = poly_sub(A.at(i, j), poly_mul(factor, A.at(i, c)));
        }
        A = A.without_row_col(r, c);
    }
    return FPModule(M.ring(), A.rows(), A.columns());
}

FPModule syzygy_of_residue_field(const QRingPtr& ring, int n) {
    if (n < 1) throw std::invalid_argument("syzygy index must be at least 1");
    FPModule k = FPModule::residue_field(ring);
    FreeResolution res = free_resolution(k, n);
    if (static_cast<int>(res.diffs.size()) < n)
        return FPModule(ring, 0, {}); // the resolution stopped: the syzygy is zero
    const PolyMatrix& d = res.diffs[n - 1];
    return FPModule::from_submodule(Submodule(ring, d.rows(), d.columns()));
}

} // namespace tracforge
