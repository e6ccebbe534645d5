#include "tracforge/quotient.hpp"

#include "tracforge/groebner.hpp"

namespace tracforge {

namespace {

gb::VecPoly poly_to_vec(const Polynomial& p) {
    gb::VecPoly v;
    v.reserve(p.term_count());
    for (const Term& t : p.terms()) v.push_back(gb::VTerm{0, t.exp, t.coef});
    return v;
}

Polynomial vec_to_poly(const PolyRingPtr& ring, const gb::VecPoly& v) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back(Term{t.exp, t.coef});
    return Polynomial(ring, std::move(terms));
}

} // namespace

QuotientRing::QuotientRing(PolyRingPtr base, std::vector<Polynomial> defining,
                           std::vector<Polynomial> gb, bool zero_ring)
    : base_(std::move(base)), defining_(std::move(defining)), gb_(std::move(gb)),
      zero_ring_(zero_ring) {}

QRingPtr QuotientRing::make(PolyRingPtr base, std::vector<Polynomial> defining,
                            bool allow_zero_ring) {
    for (const auto& f : defining)
        if (f.ring() != base) throw std::invalid_argument("defining generator from another ring");

    gb::Context ctx{base->field(), ModuleOrder::top(base->order())};
    std::vector<gb::VecPoly> inputs;
    for (const auto& f : defining)
        if (!f.is_zero()) inputs.push_back(poly_to_vec(f));
    gb::GBResult res = gb::buchberger(ctx, inputs);

    std::vector<Polynomial> gbp;
    bool zero_ring = false;
    for (const auto& v : res.basis) {
        Polynomial g = vec_to_poly(base, v);
        if (g.is_unit_constant()) zero_ring = true;
        gbp.push_back(std::move(g));
    }
    if (zero_ring && !allow_zero_ring)
        throw std::invalid_argument("defining ideal is the unit ideal");
    return QRingPtr(new QuotientRing(std::move(base), std::move(defining), std::move(gbp), zero_ring));
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
    if (p.ring() != base_) throw std::invalid_argument("polynomial from another ring");
    if (gb_.empty() || p.is_zero()) return p;
    gb::Context ctx{base_->field(), ModuleOrder::top(base_->order())};
    std::vector<gb::VecPoly> basis;
    basis.reserve(gb_.size());
    for (const auto& g : gb_) basis.push_back(poly_to_vec(g));
    return vec_to_poly(base_, gb::reduce_full(ctx, poly_to_vec(p), basis));
}

std::string QuotientRing::header() const {
    std::string s = base_->field().name() + "[";
    for (std::size_t i = 0; i < base_->vars().size(); ++i) {
        if (i) s += ",";
        s += base_->vars()[i];
    }
    s += "]";
    if (!defining_.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < defining_.size(); ++i) {
            if (i) s += ", ";
            s += to_string(defining_[i]);
        }
        s += ")";
    }
    if (base_->has_nontrivial_weights()) {
        s += " weights (";
        for (std::size_t i = 0; i < base_->weights().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(base_->weights()[i]);
        }
        s += ")";
    }
    s += " order " + base_->order().name();
    return s;
}

} // namespace tracforge
