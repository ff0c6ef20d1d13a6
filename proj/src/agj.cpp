#include "fpf/agj.hpp"

#include <stdexcept>

namespace fpf {

namespace {

FpFunctor with_side(const FpFunctor& f, Side side) {
    FpFunctor g = f;
    auto flip = [&](FpModule m) {
        m.ring.side = side;
        m.rel = m.rel.with_ring(m.ring);
        return m;
    };
    g.ring.side = side;
    g.arrow.src = flip(g.arrow.src);
    g.arrow.tgt = flip(g.arrow.tgt);
    g.arrow.phi = g.arrow.phi.with_ring(g.ring);
    g.arrow.cert = g.arrow.cert.with_ring(g.ring);
    if (g.tag.of) g.tag.of = flip(*g.tag.of);
    return g;
}

}  // namespace

FpFunctor dual(const FpFunctor& f) {
    FpFunctor c = compress_functor(f);
    NatMor tf = induced_nat(InducedKind::tensor, c.arrow);
    FpFunctor k = compress_functor(kernel_nat(tf).k);
    k = with_side(k, f.ring.side == Side::left ? Side::right : Side::left);
    k.known_half_exact = f.known_half_exact;  // D is an exact duality
    return k;
}

namespace {

// S^1 F = coker(Ext^1(Y,-) -> Ext^1(X,-)), computed on the presentation.
FpFunctor right_satellite_step(const FpFunctor& f) {
    FpFunctor c = compress_functor(f);
    NatMor e = induced_nat(InducedKind::ext1, c.arrow);
    FpFunctor s = compress_functor(cokernel_nat(e).c);
    s.known_half_exact = f.known_half_exact;
    return s;
}

}  // namespace

FpFunctor satellite(const FpFunctor& f, SatelliteIndex k) {
    if (k == 0) return f;
    if (k > 0) return satellite(right_satellite_step(f), k - 1);
    return satellite(dual(right_satellite_step(dual(f))), k + 1);
}

FpModule defect(const FpFunctor& f) { return kernel_mor(f.arrow).k; }

TensorResolution injective_resolution(const FpFunctor& f) {
    FpFunctor g = dual(f);
    CokernelResult c = cokernel_mor(g.arrow);
    return TensorResolution{g.x(), g.y(), c.c, g.arrow, c.proj};
}

bool is_projectively_stable(const FpFunctor& f) {
    return is_zero_module(evaluate(f, FpModule::free_module(f.ring, 1)));
}

StabilityVerdict is_injectively_stable(const FpFunctor& f) {
    const RingSpec& ring = f.ring;
    if (ring.kind == RingKind::integers) return StabilityVerdict::unsupported;
    if (ring.is_field()) {
        return is_zero_module(evaluate(f, FpModule::free_module(ring, 1)))
                   ? StabilityVerdict::yes
                   : StabilityVerdict::no;
    }
    // Indecomposable injectives over Z/n are the blocks Z/p^e, p^e || n.
    Scalar n = ring.modulus;
    Scalar p = 2;
    while (n > 1) {
        if (n % p == 0) {
            Scalar pe = 1;
            while (n % p == 0) {
                pe *= p;
                n /= p;
            }
            if (!is_zero_module(evaluate(f, FpModule::cyclic(ring, pe))))
                return StabilityVerdict::no;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return StabilityVerdict::yes;
}

GDimReport g_dim_zero(const FpFunctor& f, int depth) {
    if (depth < 1)
        throw std::invalid_argument("g_dim_zero: depth must be >= 1");
    if (f.ring.kind == RingKind::integers)
        return GDimReport{StabilityVerdict::unsupported, 0, false};

    auto both_stable = [](const FpFunctor& s) {
        return is_projectively_stable(s) &&
               is_injectively_stable(s) == StabilityVerdict::yes;
    };

    FpFunctor up = f, down = f;
    for (int k = 0; k <= depth; ++k) {
        if (!both_stable(up)) return GDimReport{StabilityVerdict::no, k, false};
        if (k > 0 && !both_stable(down))
            return GDimReport{StabilityVerdict::no, k, true};
        if (k < depth) {
            up = satellite(up, 1);
            down = satellite(down, -1);
        }
    }
    return GDimReport{StabilityVerdict::yes, depth, false};
}

}  // namespace fpf
