#include "tracforge/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tracforge::gb {

void normalize(const Context& ctx, VecPoly& v) {
    std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return ctx.cmp(a, b) > 0; });
    VecPoly out;
    out.reserve(v.size());
    const Field& F = ctx.field;
    for (auto& t : v) {
        if (!out.empty() && out.back().pos == t.pos && out.back().exp == t.exp) {
            out.back().coef = F.add(out.back().coef, t.coef);
            if (F.is_zero(out.back().coef)) out.pop_back();
        } else if (!F.is_zero(t.coef)) {
            out.push_back(std::move(t));
        }
    }
    v = std::move(out);
}

VecPoly sub_scaled(const Context& ctx, const VecPoly& a, const Scalar& c, const Exponents& m,
                   const VecPoly& b) {
    const Field& F = ctx.field;
    VecPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](const VTerm& t) {
        return VTerm{t.pos, exp_add(t.exp, m), F.neg(F.mul(c, t.coef))};
    };
    while (i < a.size() && j < b.size()) {
        VTerm bt = shifted(b[j]);
        int cp = ctx.cmp(a[i], bt);
        if (cp > 0) {
            out.push_back(a[i++]);
        } else if (cp < 0) {
            out.push_back(std::move(bt));
            ++j;
        } else {
            Scalar s = F.add(a[i].coef, bt.coef);
            if (!F.is_zero(s)) out.push_back(VTerm{a[i].pos, a[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(shifted(b[j]));
    return out;
}

VecPoly scale(const Context& ctx, const VecPoly& v, const Scalar& c) {
    const Field& F = ctx.field;
    if (F.is_zero(c)) return {};
    VecPoly out = v;
    for (auto& t : out) t.coef = F.mul(t.coef, c);
    return out;
}

VecPoly monic(const Context& ctx, const VecPoly& v) {
    if (v.empty()) return v;
    return scale(ctx, v, ctx.field.inv(v.front().coef));
}

bool vp_equal(const Context& ctx, const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].pos != b[i].pos || a[i].exp != b[i].exp) return false;
        if (!ctx.field.eq(a[i].coef, b[i].coef)) return false;
    }
    return true;
}

VecPoly reduce_full(const Context& ctx, VecPoly v, const std::vector<VecPoly>& basis,
                    std::vector<VecPoly>* quotients) {
    const Field& F = ctx.field;
    if (quotients) quotients->assign(basis.size(), VecPoly{});
    VecPoly rem;
    while (!v.empty()) {
        const VTerm& lt = v.front();
        int hit = -1;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].empty()) continue;
            const VTerm& bl = basis[k].front();
            if (bl.pos == lt.pos && exp_divides(bl.exp, lt.exp)) {
                hit = static_cast<int>(k);
                break;
            }
        }
        if (hit < 0) {
            rem.push_back(lt);
            v.erase(v.begin());
            continue;
        }
        const VecPoly& g = basis[hit];
        Exponents m = exp_sub(lt.exp, g.front().exp);
        Scalar c = F.div(lt.coef, g.front().coef);
        if (quotients) (*quotients)[hit].push_back(VTerm{0, m, c});
        v = sub_scaled(ctx, v, c, m, g);
    }
    if (quotients) {
        for (auto& q : *quotients) normalize(ctx, q);
    }
    return rem;
}

namespace {

struct Pair {
    std::int64_t deg;
    Exponents lcm;
    int i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return ord->compare(a.lcm, b.lcm) < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

bool single_position(const VecPoly& v, std::int32_t pos) {
    for (const auto& t : v)
        if (t.pos != pos) return false;
    return true;
}

struct AuditState {
    std::atomic<bool> enabled{false};
    AuditStats stats;
};

AuditState& audit_state() {
    static AuditState s;
    return s;
}

} // namespace

void set_global_audit(bool enabled) { audit_state().enabled = enabled; }
bool global_audit_enabled() { return audit_state().enabled; }
AuditStats& audit_stats() { return audit_state().stats; }

GBResult buchberger(const Context& ctx, const std::vector<VecPoly>& inputs, const GBOptions& opts) {
    const Field& F = ctx.field;
    GBResult result;

    std::vector<VecPoly> G;      // working basis, monic
    std::vector<VecPoly> combos; // G[k] over the input generators

    auto add_element = [&](VecPoly v, VecPoly combo) {
        Scalar inv = F.inv(v.front().coef);
        G.push_back(scale(ctx, v, inv));
        combos.push_back(scale(ctx, combo, inv));
    };

    std::set<Pair, PairLess> pairs(PairLess{&ctx.order.mono});
    auto push_pairs_for = [&](int t) {
        const VTerm& lt = G[t].front();
        for (int k = 0; k < t; ++k) {
            const VTerm& lk = G[k].front();
            if (lk.pos != lt.pos) continue;
            Exponents l = exp_lcm(lk.exp, lt.exp);
            pairs.insert(Pair{total_degree(l), std::move(l), k, t});
        }
    };

    for (std::size_t a = 0; a < inputs.size(); ++a) {
        VecPoly v = inputs[a];
        normalize(ctx, v);
        if (v.empty()) continue;
        VecPoly combo{
            VTerm{static_cast<std::int32_t>(a), Exponents(v.front().exp.size(), 0), F.one()}};
        add_element(std::move(v), std::move(combo));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }

    long processed = 0;
    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const VTerm& li = G[p.i].front();
        const VTerm& lj = G[p.j].front();

        // product criterion; sound only for elements confined to one position
        if (p.lcm == exp_add(li.exp, lj.exp) && single_position(G[p.i], li.pos) &&
            single_position(G[p.j], li.pos))
            continue;

        // chain criterion, strict-divisor form
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
            const VTerm& lk = G[k].front();
            if (lk.pos != li.pos || !exp_divides(lk.exp, p.lcm)) continue;
            if (exp_lcm(lk.exp, li.exp) != p.lcm && exp_lcm(lk.exp, lj.exp) != p.lcm) skip = true;
        }
        if (skip) continue;

        ++processed;
        Exponents mi = exp_sub(p.lcm, li.exp);
        Exponents mj = exp_sub(p.lcm, lj.exp);
        // s = x^mi*G[i] - x^mj*G[j]; both are monic
        VecPoly s = sub_scaled(ctx, VecPoly{}, F.neg(F.one()), mi, G[p.i]);
        s = sub_scaled(ctx, s, F.one(), mj, G[p.j]);
        VecPoly combo = sub_scaled(ctx, VecPoly{}, F.neg(F.one()), mi, combos[p.i]);
        combo = sub_scaled(ctx, combo, F.one(), mj, combos[p.j]);

        std::vector<VecPoly> q;
        VecPoly rem = reduce_full(ctx, std::move(s), G, &q);
        if (rem.empty()) continue;
        for (std::size_t k = 0; k < G.size(); ++k) {
            for (const VTerm& t : q[k]) combo = sub_scaled(ctx, combo, t.coef, t.exp, combos[k]);
        }
        add_element(std::move(rem), std::move(combo));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<int> order_idx(G.size());
    for (std::size_t k = 0; k < G.size(); ++k) order_idx[k] = static_cast<int>(k);
    std::sort(order_idx.begin(), order_idx.end(),
              [&](int a, int b) { return ctx.cmp(G[a].front(), G[b].front()) < 0; });
    std::vector<VecPoly> kept, kept_combos;
    for (int idx : order_idx) {
        const VTerm& lt = G[idx].front();
        bool redundant = false;
        for (const VecPoly& h : kept) {
            const VTerm& hl = h.front();
            if (hl.pos == lt.pos && exp_divides(hl.exp, lt.exp)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(std::move(G[idx]));
            kept_combos.push_back(std::move(combos[idx]));
        }
    }

    // tail-reduce each element against the others
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<VecPoly> others;
        others.reserve(kept.size() - 1);
        std::vector<int> omap;
        for (std::size_t l = 0; l < kept.size(); ++l) {
            if (l == k) continue;
            others.push_back(kept[l]);
            omap.push_back(static_cast<int>(l));
        }
        std::vector<VecPoly> q;
        VecPoly rem = reduce_full(ctx, kept[k], others, opts.with_trace ? &q : nullptr);
        if (opts.with_trace) {
            VecPoly combo = kept_combos[k];
            for (std::size_t l = 0; l < others.size(); ++l) {
                for (const VTerm& t : q[l])
                    combo = sub_scaled(ctx, combo, t.coef, t.exp, kept_combos[omap[l]]);
            }
            kept_combos[k] = std::move(combo);
        }
        kept[k] = std::move(rem);
    }

    result.basis = std::move(kept);
    if (opts.with_trace) result.trace = std::move(kept_combos);
    result.pairs_processed = processed;

    if (global_audit_enabled() && !result.basis.empty()) {
        double fraction = result.basis.size() > 50 ? 0.10 : 1.0;
        std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ (result.basis.size() * 1315423911ull);
        audit_basis(ctx, result.basis, fraction, seed);
    }
    return result;
}

std::vector<VecPoly> input_expressions(const Context& ctx, const std::vector<VecPoly>& inputs,
                                       const std::vector<VecPoly>& basis) {
    std::vector<VecPoly> rows;
    rows.reserve(inputs.size());
    for (const VecPoly& in : inputs) {
        VecPoly v = in;
        normalize(ctx, v);
        std::vector<VecPoly> q;
        VecPoly rem = reduce_full(ctx, std::move(v), basis, &q);
        if (!rem.empty())
            throw std::logic_error("input does not reduce to zero against its basis");
        VecPoly row;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            for (const VTerm& t : q[k]) row.push_back(VTerm{static_cast<std::int32_t>(k), t.exp, t.coef});
        }
        normalize(ctx, row);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Standard representation of the (i,j) S-vector over `basis`; returns the
// syzygy row x^mi*e_i - x^mj*e_j - sum q_k e_k, or throws if the remainder
// is nonzero (impossible for a Groebner basis).
VecPoly spair_row(const Context& ctx, const std::vector<VecPoly>& basis, int i, int j,
                  bool* ok = nullptr) {
    const Field& F = ctx.field;
    const VTerm& li = basis[i].front();
    const VTerm& lj = basis[j].front();
    Exponents l = exp_lcm(li.exp, lj.exp);
    Exponents mi = exp_sub(l, li.exp);
    Exponents mj = exp_sub(l, lj.exp);
    Scalar ci = F.inv(li.coef);
    Scalar cj = F.inv(lj.coef);
    VecPoly s = sub_scaled(ctx, VecPoly{}, F.neg(ci), mi, basis[i]);
    s = sub_scaled(ctx, s, cj, mj, basis[j]);
    std::vector<VecPoly> q;
    VecPoly rem = reduce_full(ctx, std::move(s), basis, &q);
    if (!rem.empty()) {
        if (ok) {
            *ok = false;
            return {};
        }
        throw std::logic_error("S-vector of a Groebner basis failed to reduce to zero");
    }
    if (ok) *ok = true;
    VecPoly row;
    row.push_back(VTerm{static_cast<std::int32_t>(i), mi, ci});
    row.push_back(VTerm{static_cast<std::int32_t>(j), mj, F.neg(cj)});
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (const VTerm& t : q[k])
            row.push_back(VTerm{static_cast<std::int32_t>(k), t.exp, F.neg(t.coef)});
    }
    normalize(ctx, row);
    return row;
}

} // namespace

std::vector<VecPoly> schreyer_syzygies(const Context& ctx, const std::vector<VecPoly>& basis) {
    std::vector<VecPoly> rows;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].front().pos != basis[j].front().pos) continue;
            VecPoly row = spair_row(ctx, basis, static_cast<int>(i), static_cast<int>(j));
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    return rows;
}

bool audit_basis(const Context& ctx, const std::vector<VecPoly>& basis, double fraction,
                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    AuditStats& st = audit_stats();
    st.bases.fetch_add(1);
    bool ok = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].front().pos != basis[j].front().pos) continue;
            if (fraction < 1.0 && coin(rng) >= fraction) continue;
            st.pairs.fetch_add(1);
            bool pair_ok = true;
            spair_row(ctx, basis, static_cast<int>(i), static_cast<int>(j), &pair_ok);
            if (!pair_ok) {
                st.failures.fetch_add(1);
                ok = false;
            }
        }
    }
    return ok;
}

} // namespace tracforge::gb
