#include "fpf/freyd.hpp"

#include <random>
#include <stdexcept>

#include "fpf/testkit.hpp"

namespace fpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void expect(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

Mat must_solve(const Mat& a, const Mat& b, const char* what) {
    auto x = solve_linear(a, b);
    expect(x.has_value(), what);
    return *x;
}

Mat zeros(const RingSpec& ring, int r, int c) { return Mat(ring, r, c); }

}  // namespace

FpFunctor rep_functor(const FpModule& x) {
    ModMorphism arrow =
        must_morphism(x, FpModule::zero(x.ring), Mat(x.ring, 0, x.gens));
    return FpFunctor{x.ring, arrow,
                     Provenance{ProvenanceKind::representable, x}, true};
}

FpFunctor tensor_functor(const FpModule& x) {
    FpModule src = FpModule::free_module(x.ring, x.gens);
    FpModule tgt = FpModule::free_module(x.ring, x.rel.cols());
    ModMorphism arrow = must_morphism(src, tgt, x.rel.transposed());
    return FpFunctor{x.ring, arrow, Provenance{ProvenanceKind::tensor, x},
                     true};
}

FpFunctor ext1_functor(const FpModule& m) {
    ModMorphism arrow = syzygy_inclusion(m);
    return FpFunctor{m.ring, arrow, Provenance{ProvenanceKind::ext1, m}, true};
}

FpFunctor zero_functor(RingSpec ring) {
    FpModule z = FpModule::zero(ring);
    return FpFunctor{ring, must_morphism(z, z, Mat(ring, 0, 0)),
                     Provenance{ProvenanceKind::derived, std::nullopt}, true};
}

FpFunctor functor_of_arrow(const ModMorphism& arrow) {
    return FpFunctor{arrow.src.ring, arrow,
                     Provenance{ProvenanceKind::derived, std::nullopt}, false};
}

NatMor induced_nat(InducedKind kind, const ModMorphism& phi) {
    switch (kind) {
        case InducedKind::representable: {
            NatMor a{rep_functor(phi.tgt), rep_functor(phi.src), phi,
                     zero_morphism(FpModule::zero(phi.src.ring),
                                   FpModule::zero(phi.src.ring))};
            expect(valid_nat(a), "induced_nat(rep): invalid pair");
            return a;
        }
        case InducedKind::tensor: {
            FpFunctor src = tensor_functor(phi.src);
            FpFunctor tgt = tensor_functor(phi.tgt);
            ModMorphism u =
                must_morphism(tgt.x(), src.x(), phi.phi.transposed());
            ModMorphism v =
                must_morphism(tgt.y(), src.y(), phi.cert.transposed());
            NatMor a{src, tgt, u, v};
            expect(valid_nat(a), "induced_nat(tensor): invalid pair");
            return a;
        }
        case InducedKind::ext1: {
            LiftedSyzygy lift = lift_syzygy(phi);
            FpFunctor src = ext1_functor(phi.tgt);
            FpFunctor tgt = ext1_functor(phi.src);
            ModMorphism v = must_morphism(tgt.y(), src.y(), lift.f_p);
            NatMor a{src, tgt, lift.omega_f, v};
            expect(valid_nat(a), "induced_nat(ext1): invalid pair");
            return a;
        }
    }
    throw std::logic_error("induced_nat: unreachable");
}

NatMor identity_nat(const FpFunctor& f) {
    return NatMor{f, f, identity_morphism(f.x()), identity_morphism(f.y())};
}

NatMor zero_nat(const FpFunctor& f, const FpFunctor& g) {
    return NatMor{f, g, zero_morphism(g.x(), f.x()),
                  zero_morphism(g.y(), f.y())};
}

NatMor compose_nat(const NatMor& beta, const NatMor& alpha) {
    return NatMor{alpha.src, beta.tgt, compose(alpha.u, beta.u),
                  compose(alpha.v, beta.v)};
}

NatMor sub_nat(const NatMor& a, const NatMor& b) {
    return NatMor{a.src, a.tgt, sub_morphisms(a.u, b.u),
                  sub_morphisms(a.v, b.v)};
}

bool valid_nat(const NatMor& a) {
    return morphisms_equal(compose(a.src.arrow, a.u),
                           compose(a.v, a.tgt.arrow));
}

FpModule evaluate(const FpFunctor& f, const FpModule& a) {
    require(f.ring.same_kind(a.ring), "evaluate: ring mismatch");
    HomModule hx(f.x(), a);
    HomModule hy(f.y(), a);
    Mat map(a.ring, hx.num_gens(), hy.num_gens());
    for (int j = 0; j < hy.num_gens(); ++j) {
        auto c = hx.express(hy.basis(j) * f.arrow.phi);
        expect(c.has_value(), "evaluate: precomposition not expressible");
        for (int i = 0; i < hx.num_gens(); ++i) map.set(i, j, c->at(i, 0));
    }
    ModMorphism m = must_morphism(hy.value(), hx.value(), map);
    return cokernel_mor(m).c;
}

ModMorphism evaluate_on_morphism(const FpFunctor& f, const ModMorphism& phi) {
    HomModule hsrc(f.x(), phi.src);
    HomModule htgt(f.x(), phi.tgt);
    Mat map(phi.src.ring, htgt.num_gens(), hsrc.num_gens());
    for (int j = 0; j < hsrc.num_gens(); ++j) {
        auto c = htgt.express(phi.phi * hsrc.basis(j));
        expect(c.has_value(),
               "evaluate_on_morphism: postcomposition not expressible");
        for (int i = 0; i < htgt.num_gens(); ++i) map.set(i, j, c->at(i, 0));
    }
    return must_morphism(evaluate(f, phi.src), evaluate(f, phi.tgt), map);
}

ModMorphism nat_value_map(const NatMor& alpha, const FpModule& a) {
    HomModule hf(alpha.src.x(), a);
    HomModule hg(alpha.tgt.x(), a);
    Mat map(a.ring, hg.num_gens(), hf.num_gens());
    for (int j = 0; j < hf.num_gens(); ++j) {
        auto c = hg.express(hf.basis(j) * alpha.u.phi);
        expect(c.has_value(), "nat_value_map: component not expressible");
        for (int i = 0; i < hg.num_gens(); ++i) map.set(i, j, c->at(i, 0));
    }
    return must_morphism(evaluate(alpha.src, a), evaluate(alpha.tgt, a), map);
}

bool nat_is_zero(const NatMor& alpha) {
    // [u] must vanish in G(X_F); the relations of the evaluation presentation
    // are exactly the trivial maps plus the image of precomposition with G's
    // arrow, so the factorization w is read off the solution.
    FpModule gxf = evaluate(alpha.tgt, alpha.src.x());
    HomModule h(alpha.tgt.x(), alpha.src.x());
    auto c = h.express(alpha.u.phi);
    expect(c.has_value(), "nat_is_zero: u not expressible");
    return solve_linear(gxf.rel, *c).has_value();
}

bool nats_equal(const NatMor& a, const NatMor& b) {
    return nat_is_zero(sub_nat(a, b));
}

NatHom::NatHom(const FpFunctor& f, const FpFunctor& g)
    : f_(f),
      g_(g),
      hom_xg_xf_(g.x(), f.x()),
      gxf_(FpModule::zero(f.ring)),
      n_{FpModule::zero(f.ring),
         zero_morphism(FpModule::zero(f.ring), FpModule::zero(f.ring))} {
    ModMorphism gf = evaluate_on_morphism(g, f.arrow);
    gxf_ = gf.src;
    n_ = kernel_mor(gf);
}

NatMor NatHom::materialize(const Mat& coeffs) const {
    const RingSpec& ring = f_.ring;
    Mat cvec = n_.incl.phi * coeffs;
    ModMorphism u = hom_xg_xf_.materialize(cvec);

    // v: Y_G -> Y_F with f.u = v.g as morphisms, well defined.  Unknowns are
    // vec(v), the zero-map correction and v's certificate.
    const Mat& relyf = f_.y().rel;
    const Mat& relyg = g_.y().rel;
    int gyf = f_.y().gens, gyg = g_.y().gens, gxg = g_.x().gens;
    Mat idyf = Mat::ident(ring, gyf);

    Mat e1 = hstack(hstack(kron(g_.arrow.phi.transposed(), idyf),
                           kron(Mat::ident(ring, gxg), relyf)),
                    zeros(ring, gxg * gyf, relyg.cols() * relyf.cols()));
    Mat e2 = hstack(
        hstack(kron(relyg.transposed(), idyf),
               zeros(ring, relyg.cols() * gyf, gxg * relyf.cols())),
        kron(Mat::ident(ring, relyg.cols()), -relyf));
    Mat rhs = vstack(vec_of(f_.arrow.phi * u.phi),
                     zeros(ring, relyg.cols() * gyf, 1));
    Mat sol =
        must_solve(vstack(e1, e2), rhs, "NatHom::materialize: no pair v");
    Mat vphi = unvec(take_rows(sol, 0, gyf * gyg), ring, gyf, gyg);
    Mat vcert = unvec(take_rows(sol, gyf * gyg + gxg * relyf.cols(),
                                relyf.cols() * relyg.cols()),
                      ring, relyf.cols(), relyg.cols());
    NatMor a{f_, g_, u, ModMorphism{g_.y(), f_.y(), vphi, vcert}};
    expect(valid_nat(a), "NatHom::materialize: invalid pair");
    return a;
}

Mat NatHom::coords_of(const NatMor& alpha) const {
    auto c0 = hom_xg_xf_.express(alpha.u.phi);
    expect(c0.has_value(), "NatHom::coords_of: u not expressible");
    Mat sol = must_solve(hstack(n_.incl.phi, gxf_.rel), *c0,
                         "NatHom::coords_of: element not in Nat(F,G)");
    return take_rows(sol, 0, n_.k.gens);
}

NatKernel kernel_nat(const NatMor& alpha) {
    const FpFunctor& f = alpha.src;
    const FpFunctor& g = alpha.tgt;

    DirectSum s1 = direct_sum(f.x(), g.y());
    ModMorphism m1 =
        must_morphism(g.x(), s1.sum, vstack(alpha.u.phi, -g.arrow.phi));
    CokernelResult c1 = cokernel_mor(m1);
    ModMorphism j = compose(c1.proj, s1.inj1);  // X -> C

    DirectSum s2 = direct_sum(c1.c, f.y());
    ModMorphism m2 =
        must_morphism(f.x(), s2.sum, vstack(j.phi, -f.arrow.phi));
    CokernelResult c2 = cokernel_mor(m2);
    ModMorphism pi = compose(c2.proj, s2.inj1);   // C -> C'
    ModMorphism vin = compose(c2.proj, s2.inj2);  // Y -> C'

    FpFunctor k = functor_of_arrow(pi);
    NatMor incl{k, f, j, vin};
    expect(valid_nat(incl), "kernel_nat: inclusion pair invalid");
    return NatKernel{k, incl};
}

NatCokernel cokernel_nat(const NatMor& alpha) {
    const FpFunctor& f = alpha.src;
    const FpFunctor& g = alpha.tgt;

    DirectSum s = direct_sum(f.x(), g.y());
    ModMorphism arrow =
        must_morphism(g.x(), s.sum, vstack(alpha.u.phi, g.arrow.phi));
    FpFunctor c = functor_of_arrow(arrow);
    NatMor proj{g, c, identity_morphism(g.x()), s.proj2};
    expect(valid_nat(proj), "cokernel_nat: projection pair invalid");
    return NatCokernel{c, proj};
}

bool is_zero_functor(const FpFunctor& f) {
    // Split retraction r with r.f = id_X, r well defined.
    const RingSpec& ring = f.ring;
    const Mat& relx = f.x().rel;
    const Mat& rely = f.y().rel;
    int gx = f.x().gens;
    Mat idx = Mat::ident(ring, gx);

    Mat e1 = hstack(hstack(kron(f.arrow.phi.transposed(), idx),
                           kron(idx, relx)),
                    zeros(ring, gx * gx, rely.cols() * relx.cols()));
    Mat e2 = hstack(
        hstack(kron(rely.transposed(), idx),
               zeros(ring, rely.cols() * gx, gx * relx.cols())),
        kron(Mat::ident(ring, rely.cols()), -relx));
    Mat rhs = vstack(vec_of(idx), zeros(ring, rely.cols() * gx, 1));
    return solve_linear(vstack(e1, e2), rhs).has_value();
}

FpFunctor compress_functor(const FpFunctor& f) {
    if (is_zero_functor(f)) return zero_functor(f.ring);
    MinimizedPresentation mx = minimize_presentation(f.x());
    MinimizedPresentation my = minimize_presentation(f.y());
    ModMorphism arrow = compose(my.to_min, compose(f.arrow, mx.from_min));
    return FpFunctor{f.ring, arrow, f.tag, f.known_half_exact};
}

namespace {

// Coordinate ranges for enumerating elements of a minimized hom module:
// [0, d) per torsion generator, [-bound, bound] per free one.
struct CoordSpace {
    std::vector<long> sizes;
    std::vector<long> offset;
    long total = 1;  // saturates at limit + 1
};

CoordSpace coord_space(const FpModule& minimized, int coeff_bound,
                       long limit) {
    CoordSpace cs;
    std::vector<Scalar> diag(minimized.gens, Scalar(0));
    for (int j = 0; j < minimized.rel.cols(); ++j)
        for (int i = 0; i < minimized.gens; ++i)
            if (minimized.rel.at(i, j) != 0) diag[i] = minimized.rel.at(i, j);
    for (int i = 0; i < minimized.gens; ++i) {
        if (diag[i] == 0 || !diag[i].fits_slong_p()) {
            cs.sizes.push_back(2L * coeff_bound + 1);
            cs.offset.push_back(-coeff_bound);
        } else {
            cs.sizes.push_back(diag[i].get_si());
            cs.offset.push_back(0);
        }
        if (cs.total <= limit) {
            long s = cs.sizes.back();
            cs.total = (cs.total > (limit + 1) / s) ? limit + 1 : cs.total * s;
        }
    }
    return cs;
}

Mat coords_from_index(const CoordSpace& cs, const RingSpec& ring, long idx) {
    Mat c(ring, static_cast<int>(cs.sizes.size()), 1);
    for (size_t i = 0; i < cs.sizes.size(); ++i) {
        c.set(static_cast<int>(i), 0,
              Scalar(idx % cs.sizes[i] + cs.offset[i]));
        idx /= cs.sizes[i];
    }
    return c;
}

}  // namespace

IsoDecision iso_functors(const FpFunctor& f, const FpFunctor& g,
                         const IsoBudget& budget,
                         const std::vector<FpModule>& testbed) {
    require(f.ring.same_kind(g.ring) && f.ring.side == g.ring.side,
            "iso_functors: ring/side mismatch");

    for (const auto& a : testbed) {
        if (!iso_modules(evaluate(f, a), evaluate(g, a))) {
            IsoDecision d;
            d.verdict = IsoDecision::Verdict::no;
            d.certificate = a;
            d.note = "evaluations differ at a testbed module";
            return d;
        }
    }

    if (is_zero_functor(f) && is_zero_functor(g)) {
        IsoDecision d;
        d.verdict = IsoDecision::Verdict::yes;
        d.witness = std::make_pair(zero_nat(f, g), zero_nat(g, f));
        d.note = "both functors are zero";
        return d;
    }

    NatHom nfg(f, g), ngf(g, f), nff(f, f);
    MinimizedPresentation mfg = minimize_presentation(nfg.value());
    MinimizedPresentation mgf = minimize_presentation(ngf.value());
    Mat id_coords = nff.coords_of(identity_nat(f));

    const int ka = mfg.m.gens, kb = mgf.m.gens;
    std::vector<NatMor> agen, bgen;
    for (int i = 0; i < ka; ++i)
        agen.push_back(nfg.materialize(
            mfg.from_min.phi * take_cols(Mat::ident(f.ring, ka), i, 1)));
    for (int j = 0; j < kb; ++j)
        bgen.push_back(ngf.materialize(
            mgf.from_min.phi * take_cols(Mat::ident(g.ring, kb), j, 1)));

    // Composition is bilinear, so the matrix of b |-> b.a assembles from the
    // Nat(F,F)-coordinates of the generator composites.
    std::vector<std::vector<Mat>> pair_coords(ka);
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < kb; ++j)
            pair_coords[i].push_back(
                nff.coords_of(compose_nat(bgen[j], agen[i])));
    const int kff = nff.value().gens;

    auto try_candidate =
        [&](const Mat& acoords) -> std::optional<IsoDecision> {
        Mat la(f.ring, kff, kb);
        for (int j = 0; j < kb; ++j)
            for (int i = 0; i < ka; ++i) {
                if (acoords.at(i, 0) == 0) continue;
                for (int r = 0; r < kff; ++r)
                    la.set(r, j,
                           la.at(r, j) + acoords.at(i, 0) *
                                             pair_coords[i][j].at(r, 0));
            }
        auto sol = solve_linear(hstack(la, nff.value().rel), id_coords);
        if (!sol) return std::nullopt;
        NatMor a = nfg.materialize(mfg.from_min.phi * acoords);
        NatMor b = ngf.materialize(mgf.from_min.phi * take_rows(*sol, 0, kb));
        if (!nats_equal(compose_nat(b, a), identity_nat(f)))
            return std::nullopt;
        if (!nats_equal(compose_nat(a, b), identity_nat(g)))
            return std::nullopt;
        IsoDecision d;
        d.verdict = IsoDecision::Verdict::yes;
        d.witness = std::make_pair(a, b);
        return d;
    };

    // Canonical isomorphisms tend to be signed unit vectors of the minimized
    // hom group; try those first.
    for (int i = 0; i < ka; ++i)
        for (int sign : {1, -1}) {
            Mat c(f.ring, ka, 1);
            c.set(i, 0, Scalar(sign));
            if (auto d = try_candidate(c)) return *d;
        }

    CoordSpace cs =
        coord_space(mfg.m, budget.coeff_bound, budget.max_enumeration);
    if (cs.total <= budget.max_enumeration) {
        for (long idx = 0; idx < cs.total; ++idx)
            if (auto d = try_candidate(coords_from_index(cs, f.ring, idx)))
                return *d;
    } else {
        std::mt19937_64 rng(budget.seed);
        for (int trial = 0; trial < budget.random_trials; ++trial) {
            Mat c(f.ring, ka, 1);
            for (int i = 0; i < ka; ++i)
                c.set(i, 0,
                      Scalar(static_cast<long>(rng() % cs.sizes[i]) +
                             cs.offset[i]));
            if (auto d = try_candidate(c)) return *d;
        }
    }

    IsoDecision d;
    d.verdict = IsoDecision::Verdict::unknown;
    d.note = "no witness found within budget";
    return d;
}

IsoDecision iso_functors(const FpFunctor& f, const FpFunctor& g,
                         const IsoBudget& budget) {
    return iso_functors(f, g, budget,
                        default_testbed(f.ring, budget.seed).modules);
}

}  // namespace fpf
