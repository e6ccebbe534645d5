#include "tracforge/submodule.hpp"

#include <algorithm>

namespace tracforge {

gb::VecPoly to_vecpoly(const FreeVector& v) {
    gb::VecPoly out;
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        for (const Term& t : v[pos].terms())
            out.push_back(gb::VTerm{static_cast<std::int32_t>(pos), t.exp, t.coef});
    }
    return out;
}

gb::VecPoly to_vecpoly(const Polynomial& p) {
    gb::VecPoly out;
    for (const Term& t : p.terms()) out.push_back(gb::VTerm{0, t.exp, t.coef});
    return out;
}

FreeVector from_vecpoly(const PolyRingPtr& ring, int rank, const gb::VecPoly& v) {
    std::vector<std::vector<Term>> per_pos(rank);
    for (const auto& t : v) {
        if (t.pos >= rank) continue;
        per_pos[t.pos].push_back(Term{t.exp, t.coef});
    }
    FreeVector out;
    out.reserve(rank);
    for (int i = 0; i < rank; ++i) out.push_back(Polynomial(ring, std::move(per_pos[i])));
    return out;
}

gb::Context engine_context(const QRingPtr& ring) {
    return gb::Context{ring->base()->field(), ModuleOrder::top(ring->base()->order())};
}

Submodule::Submodule(QRingPtr ring, int rank, std::vector<FreeVector> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
    if (rank_ < 0) throw std::invalid_argument("negative ambient rank");
    for (const auto& g : gens_) {
        if (static_cast<int>(g.size()) != rank_)
            throw std::invalid_argument("generator rank mismatch");
        for (const auto& p : g)
            if (p.ring() != ring_->base())
                throw std::invalid_argument("generator from another ring");
    }
}

Submodule Submodule::ideal(QRingPtr ring, std::vector<Polynomial> gens) {
    std::vector<FreeVector> vs;
    vs.reserve(gens.size());
    for (auto& p : gens) vs.push_back(FreeVector{std::move(p)});
    return Submodule(std::move(ring), 1, std::move(vs));
}

Submodule Submodule::zero_ideal(QRingPtr ring) { return Submodule(std::move(ring), 1, {}); }

Submodule Submodule::unit_ideal(QRingPtr ring) {
    Polynomial one = poly_from_int(ring->base(), 1);
    return ideal(std::move(ring), {std::move(one)});
}

Submodule Submodule::zero(QRingPtr ring, int rank) { return Submodule(std::move(ring), rank, {}); }

std::vector<Polynomial> Submodule::ideal_gens() const {
    if (rank_ != 1) throw std::logic_error("ideal view of a higher-rank submodule");
    std::vector<Polynomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g[0]);
    return out;
}

std::vector<gb::VecPoly> Submodule::augmented_inputs() const {
    std::vector<gb::VecPoly> inputs;
    inputs.reserve(gens_.size() + ring_->defining_gb().size() * rank_);
    for (const auto& g : gens_) inputs.push_back(to_vecpoly(g));
    for (const auto& f : ring_->defining_gb()) {
        for (int i = 0; i < rank_; ++i) {
            gb::VecPoly v;
            for (const Term& t : f.terms())
                v.push_back(gb::VTerm{static_cast<std::int32_t>(i), t.exp, t.coef});
            inputs.push_back(std::move(v));
        }
    }
    return inputs;
}

const gb::GBResult& Submodule::groebner(bool with_trace) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (with_trace) {
        if (!cache_->traced) {
            gb::Context ctx = engine_context(ring_);
            cache_->traced = std::make_shared<const gb::GBResult>(
                gb::buchberger(ctx, augmented_inputs(), gb::GBOptions{true}));
        }
        return *cache_->traced;
    }
    if (cache_->traced) return *cache_->traced;
    if (!cache_->plain) {
        gb::Context ctx = engine_context(ring_);
        cache_->plain = std::make_shared<const gb::GBResult>(
            gb::buchberger(ctx, augmented_inputs(), gb::GBOptions{false}));
    }
    return *cache_->plain;
}

const std::vector<FreeVector>& Submodule::reduced_basis() const {
    const gb::GBResult& res = groebner(false);
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->basis_vectors) {
        auto vecs = std::make_shared<std::vector<FreeVector>>();
        vecs->reserve(res.basis.size());
        for (const auto& v : res.basis) vecs->push_back(from_vecpoly(ring_->base(), rank_, v));
        cache_->basis_vectors = std::move(vecs);
    }
    return *cache_->basis_vectors;
}

std::vector<FreeVector> Submodule::canonical_generators() const {
    std::vector<FreeVector> out;
    for (const auto& v : reduced_basis()) {
        bool in_defining_block = true;
        for (const auto& p : v) {
            if (!ring_->is_zero_in_ring(p)) {
                in_defining_block = false;
                break;
            }
        }
        if (!in_defining_block) out.push_back(v);
    }
    return out;
}

FreeVector Submodule::normal_form(const FreeVector& v) const {
    if (static_cast<int>(v.size()) != rank_) throw std::invalid_argument("rank mismatch");
    gb::Context ctx = engine_context(ring_);
    gb::VecPoly in = to_vecpoly(v);
    gb::normalize(ctx, in);
    return from_vecpoly(ring_->base(), rank_, gb::reduce_full(ctx, std::move(in), groebner().basis));
}

Polynomial Submodule::normal_form(const Polynomial& p) const {
    return normal_form(FreeVector{p})[0];
}

bool Submodule::contains(const FreeVector& v) const { return fv_is_zero(normal_form(v)); }

bool Submodule::contains(const Polynomial& p) const { return contains(FreeVector{p}); }

bool Submodule::contains(const Submodule& other) const {
    if (other.rank_ != rank_ || other.ring_ != ring_)
        throw std::invalid_argument("ambient mismatch");
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Submodule::equals(const Submodule& other) const {
    if (other.rank_ != rank_ || other.ring_ != ring_)
        throw std::invalid_argument("ambient mismatch");
    const auto& a = groebner().basis;
    const auto& b = other.groebner().basis;
    if (a.size() != b.size()) return false;
    gb::Context ctx = engine_context(ring_);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!gb::vp_equal(ctx, a[i], b[i])) return false;
    return true;
}

bool Submodule::is_zero_module() const { return canonical_generators().empty(); }

bool Submodule::is_unit_ideal() const {
    if (rank_ != 1) throw std::logic_error("unit test on a higher-rank submodule");
    return contains(poly_from_int(ring_->base(), 1));
}

// --- syzygy projection ---------------------------------------------------

std::vector<std::vector<Polynomial>> projected_syzygy_rows(const QRingPtr& ring, int ambient_rank,
                                                           const std::vector<FreeVector>& cols,
                                                           int keep) {
    gb::Context ctx = engine_context(ring);
    const Field& F = ctx.field;

    std::vector<gb::VecPoly> inputs;
    inputs.reserve(cols.size() + ring->defining_gb().size() * ambient_rank);
    for (const auto& c : cols) {
        if (static_cast<int>(c.size()) != ambient_rank)
            throw std::invalid_argument("column rank mismatch");
        inputs.push_back(to_vecpoly(c));
    }
    for (const auto& f : ring->defining_gb()) {
        for (int i = 0; i < ambient_rank; ++i) {
            gb::VecPoly v;
            for (const Term& t : f.terms())
                v.push_back(gb::VTerm{static_cast<std::int32_t>(i), t.exp, t.coef});
            inputs.push_back(std::move(v));
        }
    }

    gb::GBResult res = gb::buchberger(ctx, inputs, gb::GBOptions{true});
    std::vector<gb::VecPoly> U = gb::input_expressions(ctx, inputs, res.basis);
    std::vector<gb::VecPoly> S = gb::schreyer_syzygies(ctx, res.basis);

    int nv = ring->base()->nvars();
    std::vector<gb::VecPoly> rows;

    // rows of S * T
    for (const auto& s : S) {
        gb::VecPoly row;
        for (const auto& t : s) {
            row = gb::sub_scaled(ctx, row, F.neg(t.coef), t.exp, res.trace[t.pos]);
        }
        rows.push_back(std::move(row));
    }
    // rows of I - U * T
    for (std::size_t a = 0; a < inputs.size(); ++a) {
        gb::VecPoly row{gb::VTerm{static_cast<std::int32_t>(a), Exponents(nv, 0), F.one()}};
        for (const auto& t : U[a]) {
            row = gb::sub_scaled(ctx, row, t.coef, t.exp, res.trace[t.pos]);
        }
        gb::normalize(ctx, row);
        rows.push_back(std::move(row));
    }

    std::vector<std::vector<Polynomial>> out;
    for (auto& row : rows) {
        gb::VecPoly trunc;
        for (auto& t : row)
            if (t.pos < keep) trunc.push_back(std::move(t));
        if (trunc.empty()) continue;
        out.push_back(from_vecpoly(ring->base(), keep, trunc));
    }
    return out;
}

Submodule syzygies(const Submodule& gens) {
    int g = static_cast<int>(gens.gens().size());
    auto rows = projected_syzygy_rows(gens.ring(), gens.rank(), gens.gens(), g);
    return Submodule(gens.ring(), g, std::move(rows));
}

Submodule kernel_of_matrix(const QRingPtr& ring, const PolyMatrix& A) {
    if (A.rows() == 0) {
        // map into the zero module: kernel is everything
        std::vector<FreeVector> gens;
        for (int i = 0; i < A.cols(); ++i) gens.push_back(fv_basis(ring->base(), A.cols(), i));
        return Submodule(ring, A.cols(), std::move(gens));
    }
    auto rows = projected_syzygy_rows(ring, A.rows(), A.columns(), A.cols());
    return Submodule(ring, A.cols(), std::move(rows));
}

Submodule intersect(const Submodule& U, const Submodule& V) {
    if (U.ring() != V.ring() || U.rank() != V.rank())
        throw std::invalid_argument("ambient mismatch");
    std::vector<FreeVector> cols = U.gens();
    for (const auto& g : V.gens()) cols.push_back(g);
    int p = static_cast<int>(U.gens().size());
    auto rows = projected_syzygy_rows(U.ring(), U.rank(), cols, p);
    // each row (a_1..a_p) satisfies sum a_i u_i = -(V-part) mod J, so the
    // combination lies in both submodules
    std::vector<FreeVector> elems;
    for (const auto& row : rows) {
        FreeVector w = fv_zero(U.ring()->base(), U.rank());
        for (int i = 0; i < p; ++i) w = fv_add(w, fv_scale(U.gens()[i], row[i]));
        if (!fv_is_zero(w)) elems.push_back(std::move(w));
    }
    return Submodule(U.ring(), U.rank(), std::move(elems));
}

Ideal colon(const Submodule& U, const FreeVector& v) {
    if (static_cast<int>(v.size()) != U.rank()) throw std::invalid_argument("ambient mismatch");
    if (fv_is_zero(v)) return Submodule::unit_ideal(U.ring());
    std::vector<FreeVector> cols;
    cols.push_back(v);
    for (const auto& g : U.gens()) cols.push_back(g);
    auto rows = projected_syzygy_rows(U.ring(), U.rank(), cols, 1);
    std::vector<Polynomial> gens;
    for (auto& row : rows)
        if (!row[0].is_zero()) gens.push_back(std::move(row[0]));
    return Submodule::ideal(U.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (I.rank() != 1) throw std::invalid_argument("colon by element needs an ideal");
    return colon(I, FreeVector{f});
}

Ideal annihilator(int rank, const Submodule& W) {
    if (W.rank() != rank) throw std::invalid_argument("presentation rank mismatch");
    QRingPtr ring = W.ring();
    if (rank == 0) return Submodule::unit_ideal(ring);
    Ideal acc = colon(W, fv_basis(ring->base(), rank, 0));
    for (int i = 1; i < rank; ++i) acc = intersect(acc, colon(W, fv_basis(ring->base(), rank, i)));
    return acc;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& keep_vars) {
    if (I.rank() != 1) throw std::invalid_argument("eliminate needs an ideal");
    const QRingPtr& ring = I.ring();
    const PolyRingPtr& base = ring->base();
    std::vector<bool> keep(base->nvars(), false);
    for (int v : keep_vars) keep.at(v) = true;
    std::vector<int> eliminated;
    for (int v = 0; v < base->nvars(); ++v)
        if (!keep[v]) eliminated.push_back(v);

    gb::Context ctx{base->field(),
                    ModuleOrder::top(MonomialOrder::block_elimination(eliminated))};
    std::vector<gb::VecPoly> inputs;
    for (const auto& g : I.gens())
        if (!g[0].is_zero()) inputs.push_back(to_vecpoly(g[0]));
    for (const auto& f : ring->defining_gb()) inputs.push_back(to_vecpoly(f));
    gb::GBResult res = gb::buchberger(ctx, inputs);

    std::vector<Polynomial> out;
    for (const auto& v : res.basis) {
        bool pure = true;
        for (const auto& t : v) {
            for (int e : eliminated)
                if (t.exp[e] != 0) pure = false;
        }
        if (!pure) continue;
        std::vector<Term> terms;
        for (const auto& t : v) terms.push_back(Term{t.exp, t.coef});
        out.push_back(Polynomial(base, std::move(terms)));
    }
    return Submodule::ideal(ring, std::move(out));
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (I.rank() != 1) throw std::invalid_argument("radical membership needs an ideal");
    const QRingPtr& ring = I.ring();
    const PolyRingPtr& base = ring->base();

    std::string fresh = "_t";
    while (base->var_index(fresh) >= 0) fresh += "_";
    PolyRingPtr ext = base->extended(fresh, MonomialOrder::grevlex());

    auto lift = [&](const Polynomial& p) {
        std::vector<Term> terms;
        for (const Term& t : p.terms()) {
            Term u = t;
            u.exp.push_back(0);
            terms.push_back(std::move(u));
        }
        return Polynomial(ext, std::move(terms));
    };

    gb::Context ctx{ext->field(), ModuleOrder::top(ext->order())};
    std::vector<gb::VecPoly> inputs;
    for (const auto& g : I.gens())
        if (!g[0].is_zero()) inputs.push_back(to_vecpoly(lift(g[0])));
    for (const auto& q : ring->defining_gb()) inputs.push_back(to_vecpoly(lift(q)));
    Polynomial t_var = poly_var(ext, ext->nvars() - 1);
    Polynomial one = poly_from_int(ext, 1);
    inputs.push_back(to_vecpoly(poly_sub(one, poly_mul(t_var, lift(f)))));

    gb::GBResult res = gb::buchberger(ctx, inputs);
    for (const auto& v : res.basis)
        if (v.size() == 1 && total_degree(v[0].exp) == 0) return true;
    return false;
}

int krull_dimension(const Ideal& I) {
    if (I.rank() != 1) throw std::invalid_argument("dimension needs an ideal");
    const auto& basis = I.groebner().basis; // augmented: leading terms of I + defining
    std::vector<Exponents> lts;
    for (const auto& v : basis) {
        if (total_degree(v.front().exp) == 0) throw std::invalid_argument("unit ideal");
        lts.push_back(v.front().exp);
    }
    int n = I.ring()->base()->nvars();
    if (n > 24) throw std::logic_error("dimension search limited to 24 variables");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& e : lts) {
            bool supported = true;
            for (int v = 0; v < n; ++v) {
                if (e[v] > 0 && !(mask & (1u << v))) {
                    supported = false;
                    break;
                }
            }
            if (supported) { // a leading monomial lives inside the candidate set
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool dimension_is_zero(const Ideal& I) { return krull_dimension(I) == 0; }

} // namespace tracforge
