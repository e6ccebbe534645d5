// Acceptance suite: one criterion per numbered block, one PASS/FAIL line
// each, nonzero exit if any fails. All checks are exact ideal/submodule
// containments or equalities; no numerical tolerance exists in the system.
#include "tracforge/closure.hpp"
#include "tracforge/script.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace tracforge;

namespace {

struct Criterion {
    int id;
    bool ok = true;
    std::string label;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// --- corpus rings ----------------------------------------------------------

QRingPtr whitney() {
    auto P = PolyRing::make(Field::gf(32003), {"x", "y", "z"},
                            MonomialOrder::weighted_grevlex({1, 2, 2}), {1, 2, 2});
    return QuotientRing::make(P, {parse_polynomial(P, "x^2*y + z^2")});
}
QRingPtr semigroup_ab() {
    auto P = PolyRing::make(Field::gf(32003), {"a", "b"},
                            MonomialOrder::weighted_grevlex({2, 3}), {2, 3});
    return QuotientRing::make(P, {parse_polynomial(P, "b^2 - a^3")});
}
QRingPtr quadric_abc() {
    auto P = PolyRing::make(Field::gf(32003), {"a", "b", "c"});
    return QuotientRing::make(P, {parse_polynomial(P, "b^2 - a*c")});
}
QRingPtr xz_plane_pair() {
    auto P = PolyRing::make(Field::gf(32003), {"x", "y", "z"});
    return QuotientRing::make(P, {parse_polynomial(P, "x*z")});
}
QRingPtr z2_ring() {
    auto P = PolyRing::make(Field::gf(32003), {"x", "y", "z"});
    return QuotientRing::make(P, {parse_polynomial(P, "z^2")});
}
QRingPtr a3_cone() {
    auto P = PolyRing::make(Field::gf(32003), {"x", "y", "z"},
                            MonomialOrder::weighted_grevlex({2, 2, 1}), {2, 2, 1});
    return QuotientRing::make(P, {parse_polynomial(P, "x*y - z^4")});
}
QRingPtr artinian_xy() {
    auto P = PolyRing::make(Field::gf(32003), {"x", "y"});
    return QuotientRing::make(P, {parse_polynomial(P, "x^2"), parse_polynomial(P, "x*y"),
                                  parse_polynomial(P, "y^2")});
}
QRingPtr artinian_x4() {
    auto P = PolyRing::make(Field::gf(32003), {"x"});
    return QuotientRing::make(P, {parse_polynomial(P, "x^4")});
}

Ideal ideal_of(const QRingPtr& R, std::vector<std::string> gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(R->base(), s));
    return Submodule::ideal(R, std::move(ps));
}

PolyMatrix mat(const QRingPtr& R, std::vector<std::vector<std::string>> rows) {
    PolyMatrix m(R->base(), static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                parse_polynomial(R->base(), rows[i][j]);
    return m;
}

FPModule whitney_M(const QRingPtr& W) {
    return FPModule::from_cokernel(W, mat(W, {{"z", "y"}, {"-x^2", "z"}}));
}
FPModule whitney_N(const QRingPtr& W) {
    return FPModule::from_cokernel(W, mat(W, {{"z", "x*y"}, {"-x", "z"}}));
}
FPModule whitney_Mj(const QRingPtr& W, int j) {
    std::string yj = "y^" + std::to_string(j), yj1 = "y^" + std::to_string(j + 1);
    return FPModule::from_cokernel(W, mat(W, {{"z", "0", "x*y", "0"},
                                              {"0", "z", yj1, "-x*y"},
                                              {"-x", "0", "z", "0"},
                                              {"-" + yj, "x", "0", "z"}}));
}
FPModule whitney_Nj(const QRingPtr& W, int j) {
    std::string yj = "y^" + std::to_string(j);
    return FPModule::from_cokernel(W, mat(W, {{"z", "0", "x*y", "0"},
                                              {"0", "z", yj, "-x"},
                                              {"-x", "0", "z", "0"},
                                              {"-" + yj, "x*y", "0", "z"}}));
}

// random data ---------------------------------------------------------------

Polynomial random_poly(const QRingPtr& R, std::mt19937_64& rng, int terms = 2, int deg = 2) {
    std::uniform_int_distribution<int> d(0, deg);
    std::uniform_int_distribution<std::int64_t> c(-5, 5);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Exponents e(R->base()->nvars());
        for (auto& x : e) x = d(rng);
        ts.push_back(Term{e, R->base()->field().from_int(c(rng))});
    }
    return Polynomial(R->base(), std::move(ts));
}

FPModule random_module(const QRingPtr& R, std::mt19937_64& rng, int rank = 2, int rels = 2) {
    std::vector<FreeVector> rs;
    for (int k = 0; k < rels; ++k) {
        FreeVector v;
        for (int i = 0; i < rank; ++i) v.push_back(random_poly(R, rng));
        rs.push_back(std::move(v));
    }
    return FPModule(R, rank, std::move(rs));
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    std::vector<Polynomial> gens;
    for (const auto& g : A.gens()) gens.push_back(g[0]);
    for (const auto& g : B.gens()) gens.push_back(g[0]);
    return Submodule::ideal(A.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
    std::vector<Polynomial> gens;
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) gens.push_back(poly_mul(a[0], b[0]));
    if (gens.empty()) return Submodule::zero_ideal(A.ring());
    return Submodule::ideal(A.ring(), std::move(gens));
}

} // namespace

// --- criteria ----------------------------------------------------------------

static Criterion criterion_1() {
    Criterion c{1};
    c.label = "semigroup curve: trace of <(a^2,b),(b,a)> equals (a, b)";
    auto R = semigroup_ab();
    const auto& B = R->base();
    Submodule gens(R, 2,
                   {FreeVector{parse_polynomial(B, "a^2"), parse_polynomial(B, "b")},
                    FreeVector{parse_polynomial(B, "b"), parse_polynomial(B, "a")}});
    Ideal tr = trace_ideal(FPModule::from_submodule(gens));
    c.require(tr.equals(ideal_of(R, {"a", "b"})), "trace != (a, b)");
    return c;
}

static Criterion criterion_2() {
    Criterion c{2};
    c.label = "quadric cone: residue-field resolution 1,3,4 and closure of (a,c) is (a,b,c)";
    auto R = quadric_abc();
    FreeResolution res = free_resolution(FPModule::residue_field(R), 2);
    c.require(res.ranks() == std::vector<int>{1, 3, 4}, "resolution ranks differ from 1,3,4");
    c.require(res.minimal, "resolution is not minimal");
    if (res.diffs.size() == 2) {
        const auto& B = R->base();
        std::vector<FreeVector> printed{
            {parse_polynomial(B, "-c"), parse_polynomial(B, "b"), poly_zero(B)},
            {parse_polynomial(B, "-b"), parse_polynomial(B, "a"), poly_zero(B)},
            {poly_zero(B), parse_polynomial(B, "-c"), parse_polynomial(B, "b")},
            {parse_polynomial(B, "-c"), poly_zero(B), parse_polynomial(B, "a")}};
        c.require(Submodule(R, 3, res.diffs[1].columns()).equals(Submodule(R, 3, printed)),
                  "second differential is not column-equivalent to the tabulated matrix");
    }
    FPModule K = syzygy_of_residue_field(R, 2);
    c.require(K.rank() == 4, "second syzygy is not 4-generated");
    c.require(K.relations().size() == 4, "second syzygy does not have 4 relations");
    Ideal cl = closure_of_ideal(ideal_of(R, {"a", "c"}), K);
    c.require(cl.equals(ideal_of(R, {"a", "b", "c"})), "closure of (a,c) != (a,b,c)");
    return c;
}

static Criterion criterion_3() {
    Criterion c{3};
    c.label = "whitney umbrella traces and family intersection (x^2, x*y, z)";
    auto W = whitney();
    c.require(trace_ideal(whitney_M(W)).equals(ideal_of(W, {"x^2", "y", "z"})),
              "trace(M) != (x^2, y, z)");
    c.require(trace_ideal(whitney_N(W)).equals(ideal_of(W, {"x", "z"})), "trace(N) != (x, z)");
    std::vector<FPModule> family{whitney_M(W), whitney_N(W)};
    for (int j = 1; j <= 5; ++j) {
        Ideal expect = ideal_of(W, {"x", "y^" + std::to_string(j), "z"});
        FPModule Mj = whitney_Mj(W, j), Nj = whitney_Nj(W, j);
        c.require(trace_ideal(Mj).equals(expect),
                  "trace(M_" + std::to_string(j) + ") != (x, y^j, z)");
        c.require(trace_ideal(Nj).equals(expect),
                  "trace(N_" + std::to_string(j) + ") != (x, y^j, z)");
        family.push_back(std::move(Mj));
        family.push_back(std::move(Nj));
    }
    Ideal tau = family_test_ideal(W, family);
    c.require(tau.equals(ideal_of(W, {"x^2", "x*y", "z"})), "family != (x^2, x*y, z)");
    c.require(!is_m_primary(tau), "family intersection unexpectedly m-primary");
    return c;
}

static Criterion criterion_4() {
    Criterion c{4};
    c.label = "plane pair traces and family intersection (0)";
    auto R = xz_plane_pair();
    FPModule M = FPModule::from_cokernel(R, mat(R, {{"x"}}));
    FPModule Mp = FPModule::from_cokernel(R, mat(R, {{"z"}}));
    c.require(trace_ideal(M).equals(ideal_of(R, {"z"})), "trace(M) != (z)");
    c.require(trace_ideal(Mp).equals(ideal_of(R, {"x"})), "trace(M') != (x)");
    std::vector<FPModule> family{M, Mp};
    for (int j = 1; j <= 3; ++j) {
        std::string yj = "y^" + std::to_string(j);
        FPModule Mj = FPModule::from_cokernel(R, mat(R, {{"z", "-" + yj}, {"0", "x"}}));
        FPModule Pj = FPModule::from_cokernel(R, mat(R, {{"x", yj}, {"0", "z"}}));
        Ideal expect = ideal_of(R, {"x", yj, "z"});
        c.require(trace_ideal(Mj).equals(expect), "trace(M_j) != (x, y^j, z)");
        c.require(trace_ideal(Pj).equals(expect), "trace(M'_j) != (x, y^j, z)");
        family.push_back(std::move(Mj));
        family.push_back(std::move(Pj));
    }
    c.require(family_test_ideal(R, family).is_zero_module(), "family != (0)");
    return c;
}

static Criterion criterion_5() {
    Criterion c{5};
    c.label = "square-zero block actions: trace of coker(zI - A) is (x, y, z) for n = 2..4";
    auto R = z2_ring();
    const auto& B = R->base();
    Polynomial x = parse_polynomial(B, "x"), y = parse_polynomial(B, "y"),
               z = parse_polynomial(B, "z");
    for (int n = 2; n <= 4; ++n) {
        int N = 2 * n;
        PolyMatrix zIA(B, N, N);
        for (int i = 0; i < N; ++i) zIA.at(i, i) = z;
        for (int j = 0; j < n; ++j) {
            zIA.at(j, n + j) = -x;                  // diagonal of the block
            if (j + 1 < n) zIA.at(j, n + j + 1) = -y; // superdiagonal
        }
        FPModule Mn = FPModule::from_cokernel(R, zIA);
        c.require(trace_ideal(Mn).equals(ideal_of(R, {"x", "y", "z"})),
                  "trace(M_" + std::to_string(n) + ") != (x, y, z)");
    }
    return c;
}

static Criterion criterion_6() {
    Criterion c{6};
    c.label = "quartic cone: Hom(M1,R) generators, traces m, no mutual generation";
    auto R = a3_cone();
    const auto& B = R->base();
    FPModule M1 = FPModule::from_submodule(
        Submodule::ideal(R, {parse_polynomial(B, "y"), parse_polynomial(B, "z")}));
    FPModule M3 = FPModule::from_submodule(
        Submodule::ideal(R, {parse_polynomial(B, "x"), parse_polynomial(B, "z")}));

    Submodule H = hom_into_ring(M1);
    FreeVector map1{parse_polynomial(B, "y"), parse_polynomial(B, "z")};
    FreeVector map2{parse_polynomial(B, "z^3"), parse_polynomial(B, "x")};
    c.require(H.contains(map1), "claimed map (y, z) not in Hom(M1, R)");
    c.require(H.contains(map2), "claimed map (z^3, x) not in Hom(M1, R)");
    Submodule claimed(R, 2, {map1, map2});
    c.require(claimed.contains(H), "Hom(M1, R) has generators beyond the two tabulated maps");

    std::vector<Polynomial> entries;
    for (const auto& g : H.canonical_generators())
        for (const auto& p : g)
            if (!p.is_zero()) entries.push_back(p);
    c.require(Submodule::ideal(R, entries).equals(ideal_of(R, {"x", "y", "z"})),
              "entry ideal of Hom(M1, R) is not the maximal ideal");

    Ideal m = ideal_of(R, {"x", "y", "z"});
    c.require(trace_ideal(M1).equals(m), "trace(M1) != m");
    c.require(trace_ideal(M3).equals(m), "trace(M3) != m");
    c.require(!generates(M1, M3), "M1 unexpectedly generates M3");
    c.require(!generates(M3, M1), "M3 unexpectedly generates M1");
    return c;
}

static Criterion criterion_7() {
    Criterion c{7};
    c.label = "property suites (closure laws, trace laws, Ext bound, socle, base change)";
    std::vector<QRingPtr> rings{whitney(), quadric_abc()};

    // closure laws: extension, idempotence, order preservation (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(1000 + ri);
        for (int it = 0; it < 100; ++it) {
            Ideal I = Submodule::ideal(R, {random_poly(R, rng), random_poly(R, rng)});
            Ideal Iprime = ideal_sum(I, Submodule::ideal(R, {random_poly(R, rng)}));
            FPModule Bm = random_module(R, rng);
            Ideal cl = closure_of_ideal(I, Bm);
            c.require(cl.contains(I), "extension failed");
            c.require(closure_of_ideal(cl, Bm).equals(cl), "idempotence failed");
            c.require(closure_of_ideal(Iprime, Bm).contains(cl), "order preservation failed");
            if (!c.ok) return c;
        }
    }

    // trace additivity over direct sums (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(2000 + ri);
        for (int it = 0; it < 100; ++it) {
            FPModule Bm = random_module(R, rng), Cm = random_module(R, rng);
            Ideal lhs = trace_ideal(direct_sum(Bm, Cm));
            Ideal rhs = ideal_sum(trace_ideal(Bm), trace_ideal(Cm));
            c.require(lhs.equals(rhs), "trace(B + C) != trace(B) + trace(C)");
            if (!c.ok) return c;
        }
    }

    // tensor containment (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(3000 + ri);
        for (int it = 0; it < 100; ++it) {
            FPModule Bm = random_module(R, rng), Cm = random_module(R, rng);
            Ideal lhs = trace_ideal(tensor(Bm, Cm));
            Ideal meet = intersect(trace_ideal(Bm), trace_ideal(Cm));
            c.require(meet.contains(lhs), "trace(B x C) not inside the intersection");
            if (!c.ok) return c;
        }
    }

    // generation reverses trace containment, and closure containment follows
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(4000 + ri);
        for (int it = 0; it < 100; ++it) {
            FPModule Bm = random_module(R, rng);
            // quotients of B + B are generated by B
            FPModule BB = direct_sum(Bm, Bm);
            std::vector<FreeVector> extra = BB.relations();
            FreeVector w;
            for (int i = 0; i < BB.rank(); ++i) w.push_back(random_poly(R, rng, 1, 1));
            extra.push_back(std::move(w));
            FPModule D(R, BB.rank(), extra);
            c.require(generates(Bm, D), "B fails to generate its own quotient");
            c.require(trace_ideal(Bm).contains(trace_ideal(D)),
                      "generation did not reverse trace containment");
            Ideal I = Submodule::ideal(R, {random_poly(R, rng)});
            c.require(closure_of_ideal(I, D).contains(closure_of_ideal(I, Bm)),
                      "generation did not give closure containment");
            if (!c.ok) return c;
        }
    }

    // trace idempotence through B x Hom(B, R) (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(5000 + ri);
        for (int it = 0; it < 100; ++it) {
            FPModule Bm = random_module(R, rng);
            FPModule dual = hom(Bm, FPModule::free_module(R, 1)).module;
            Ideal lhs = trace_ideal(tensor(Bm, dual));
            c.require(lhs.equals(trace_ideal(Bm)), "trace(B x Hom(B,R)) != trace(B)");
            if (!c.ok) return c;
        }
    }

    // Ext bound on short exact sequences 0 -> B -> C -> D -> 0 (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(6000 + ri);
        for (int it = 0; it < 100; ++it) {
            FPModule Cm = random_module(R, rng);
            std::vector<FreeVector> sub_gens;
            for (int k = 0; k < 2; ++k) {
                FreeVector v;
                for (int i = 0; i < Cm.rank(); ++i) v.push_back(random_poly(R, rng, 1, 1));
                sub_gens.push_back(std::move(v));
            }
            SubPresentation Bp = present_submodule(Cm, sub_gens);
            std::vector<FreeVector> drels = Cm.relations();
            for (const auto& g : sub_gens) drels.push_back(g);
            FPModule D(R, Cm.rank(), drels);

            FPModule e = ext1(D, FPModule::free_module(R, 1));
            Ideal J = annihilator(e.rank(), e.relation_submodule());
            Ideal lhs = ideal_sum(ideal_product(J, trace_ideal(Bp.module)), trace_ideal(D));
            c.require(trace_ideal(Cm).contains(lhs), "Ext bound violated");
            if (!c.ok) return c;
        }
    }

    // zero stays closed in Hom modules (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(7000 + ri);
        for (int it = 0; it < 100; ++it) {
            FPModule M = random_module(R, rng, 2, 1);
            FPModule N = random_module(R, rng, 1, 1);
            FPModule H = hom(M, N).module;
            Submodule cl = closure_of_submodule(Submodule::zero(R, H.rank()), H, M);
            c.require(cl.equals(H.relation_submodule()), "zero not closed in Hom module");
            if (!c.ok) return c;
        }
    }

    // socle containment and the Artinian family identity (>= 100/ring)
    for (const QRingPtr& R : {artinian_xy(), artinian_x4()}) {
        std::mt19937_64 rng(8000 + R->base()->nvars());
        Ideal soc = socle(R);
        FPModule k = FPModule::residue_field(R);
        c.require(family_test_ideal(R, {k}).equals(soc), "trace of k differs from the socle");
        for (int it = 0; it < 100; ++it) {
            FPModule Bm = random_module(R, rng);
            if (is_zero(Bm)) continue;
            c.require(trace_ideal(Bm).contains(soc), "socle not inside a trace ideal");
            FPModule B2 = random_module(R, rng, 1, 1);
            std::vector<FPModule> fam{k, Bm};
            if (!is_zero(B2)) fam.push_back(B2);
            c.require(family_test_ideal(R, fam).equals(soc),
                      "family containing k does not intersect to the socle");
            if (!c.ok) return c;
        }
    }

    // quotient base change (>= 100/ring)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        const QRingPtr& R = rings[ri];
        std::mt19937_64 rng(9000 + ri);
        std::uniform_int_distribution<int> pick(0, R->base()->nvars() - 1);
        for (int it = 0; it < 100; ++it) {
            Ideal I = Submodule::ideal(R, {random_poly(R, rng), random_poly(R, rng)});
            FPModule Bm = random_module(R, rng);
            Polynomial g = poly_var(R->base(), pick(rng));
            std::vector<Polynomial> defining = R->defining();
            defining.push_back(g);
            QRingPtr Rq = QuotientRing::make(R->base(), defining);
            if (Rq->is_zero_ring()) continue;
            FPModule Bq(Rq, Bm.rank(), Bm.relations());
            Ideal Iq = Submodule::ideal(Rq, I.ideal_gens());
            Ideal clq = closure_of_ideal(Iq, Bq);
            for (const auto& u : closure_of_ideal(I, Bm).canonical_generators())
                c.require(clq.contains(u[0]), "base change containment failed");
            if (!c.ok) return c;
        }
    }
    return c;
}

static Criterion criterion_8() {
    Criterion c{8};
    c.label = "trace-ideal vanishing loci sit inside the singular locus";
    auto W = whitney();
    std::vector<FPModule> wmods{whitney_M(W), whitney_N(W)};
    for (int j = 1; j <= 3; ++j) {
        wmods.push_back(whitney_Mj(W, j));
        wmods.push_back(whitney_Nj(W, j));
    }
    for (const auto& m : wmods)
        c.require(singular_containment_check(m).ok, "whitney module failed the check");

    // explicit witness for the umbrella: each Jacobian generator of f lies in
    // the radical of trace(M) + (f)
    Ideal tau = trace_ideal(whitney_M(W));
    for (const char* g : {"2*x*y", "x^2", "2*z", "x^2*y + z^2"})
        c.require(radical_membership(parse_polynomial(W->base(), g), tau),
                  std::string("jacobian generator ") + g + " escapes the radical");

    auto Q = quadric_abc();
    c.require(singular_containment_check(syzygy_of_residue_field(Q, 2)).ok,
              "quadric syzygy module failed the check");
    auto S = semigroup_ab();
    {
        const auto& B = S->base();
        Submodule gens(S, 2,
                       {FreeVector{parse_polynomial(B, "a^2"), parse_polynomial(B, "b")},
                        FreeVector{parse_polynomial(B, "b"), parse_polynomial(B, "a")}});
        c.require(singular_containment_check(FPModule::from_submodule(gens)).ok,
                  "semigroup module failed the check");
    }
    auto X = xz_plane_pair();
    for (auto rows : std::vector<std::vector<std::vector<std::string>>>{
             {{"x"}}, {{"z"}}, {{"z", "-y"}, {"0", "x"}}, {{"x", "y"}, {"0", "z"}}})
        c.require(singular_containment_check(FPModule::from_cokernel(X, mat(X, rows))).ok,
                  "plane-pair module failed the check");
    auto Z = z2_ring();
    c.require(singular_containment_check(
                  FPModule::from_cokernel(
                      Z, mat(Z, {{"z", "0", "-x", "-y"}, {"0", "z", "0", "-x"},
                                 {"0", "0", "z", "0"}, {"0", "0", "0", "z"}})))
                  .ok,
              "square-zero module failed the check");
    auto A = a3_cone();
    const auto& AB = A->base();
    c.require(singular_containment_check(
                  FPModule::from_submodule(Submodule::ideal(
                      A, {parse_polynomial(AB, "y"), parse_polynomial(AB, "z")})))
                  .ok,
              "quartic-cone module failed the check");
    return c;
}

static Criterion criterion_9(long bases_before) {
    Criterion c{9};
    gb::AuditStats& st = gb::audit_stats();
    long bases = st.bases.load() - bases_before;
    long pairs = st.pairs.load();
    long failures = st.failures.load();
    std::ostringstream os;
    os << "groebner self-audit: " << bases << " bases, " << pairs
       << " sampled S-vectors reduced to zero";
    c.label = os.str();
    c.require(bases > 0, "no bases were audited");
    c.require(failures == 0, std::to_string(failures) + " S-vector(s) failed to reduce");
    return c;
}

int run_all() {
    gb::set_global_audit(true);
    gb::audit_stats().reset();

    std::vector<Criterion> results;
    auto timed = [&](Criterion (*fn)()) {
        auto t0 = std::chrono::steady_clock::now();
        Criterion c = fn();
        c.detail += (c.detail.empty() ? "" : " ");
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
        std::ostringstream os;
        os << "[" << static_cast<long>(ms) << " ms]";
        c.detail += os.str();
        results.push_back(std::move(c));
    };
    timed(criterion_1);
    timed(criterion_2);
    timed(criterion_3);
    timed(criterion_4);
    timed(criterion_5);
    timed(criterion_6);
    timed(criterion_7);
    timed(criterion_8);
    results.push_back(criterion_9(0));

    int failed = 0;
    for (const auto& c : results) {
        std::cout << "[" << c.id << "] " << (c.ok ? "PASS" : "FAIL") << "  " << c.label;
        if (!c.detail.empty()) std::cout << "  " << c.detail;
        std::cout << "\n";
        if (!c.ok) ++failed;
    }
    std::cout << "acceptance: " << (results.size() - failed) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

int main() { return run_all(); }
