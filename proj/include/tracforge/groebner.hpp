#pragma once

#include "tracforge/field.hpp"
#include "tracforge/monomial.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

namespace tracforge::gb {

/// One term of a free-module element: coef * x^exp * e_pos.
struct VTerm {
    std::int32_t pos;
    Exponents exp;
    Scalar coef;
};

/// Module element as a term list, strictly descending under the active order.
using VecPoly = std::vector<VTerm>;

struct Context {
    Field field;
    ModuleOrder order;

    int cmp(const VTerm& a, const VTerm& b) const {
        return order.compare(a.pos, a.exp, b.pos, b.exp);
    }
};

void normalize(const Context& ctx, VecPoly& v);
/// a - c * x^m * b, inputs normalized.
VecPoly sub_scaled(const Context& ctx, const VecPoly& a, const Scalar& c, const Exponents& m,
                   const VecPoly& b);
VecPoly scale(const Context& ctx, const VecPoly& v, const Scalar& c);
VecPoly monic(const Context& ctx, const VecPoly& v);
bool vp_equal(const Context& ctx, const VecPoly& a, const VecPoly& b);

/// Full normal form: no term of the remainder is divisible by any basis
/// leading term. The reducer is the first basis element, in stored order,
/// whose leading term divides; the basis produced by buchberger() is stored
/// ascending by leading term, which freezes the reduction path.
/// When `quotients` is non-null it receives, per basis element, the ring
/// coefficient used (as a rank-one term list on position 0).
VecPoly reduce_full(const Context& ctx, VecPoly v, const std::vector<VecPoly>& basis,
                    std::vector<VecPoly>* quotients = nullptr);

struct GBOptions {
    bool with_trace = false;
};

struct GBResult {
    /// Reduced Groebner basis: monic, pairwise non-divisible leading terms,
    /// tails fully reduced, sorted ascending by leading term.
    std::vector<VecPoly> basis;
    /// trace[k] expresses basis[k] over the input generators (positions are
    /// input indices). Populated only with GBOptions::with_trace.
    std::vector<VecPoly> trace;
    long pairs_processed = 0;
};

GBResult buchberger(const Context& ctx, const std::vector<VecPoly>& inputs,
                    const GBOptions& opts = {});

/// Expresses each input over the basis (inputs must reduce to zero).
std::vector<VecPoly> input_expressions(const Context& ctx, const std::vector<VecPoly>& inputs,
                                       const std::vector<VecPoly>& basis);

/// Generators of the syzygy module of a reduced basis: one row per
/// same-position pair, from the standard representation of its S-vector.
/// Rows live in a free module with one position per basis element.
std::vector<VecPoly> schreyer_syzygies(const Context& ctx, const std::vector<VecPoly>& basis);

/// Reduces a sample of S-vectors of `basis` and checks they vanish.
bool audit_basis(const Context& ctx, const std::vector<VecPoly>& basis, double fraction,
                 std::uint64_t seed);

struct AuditStats {
    std::atomic<long> bases{0};
    std::atomic<long> pairs{0};
    std::atomic<long> failures{0};
    void reset() { bases = pairs = failures = 0; }
};

/// When enabled, every buchberger() call audits its own result: all pairs for
/// bases of at most 50 elements, a 10% sample above that.
void set_global_audit(bool enabled);
bool global_audit_enabled();
AuditStats& audit_stats();

} // namespace tracforge::gb
