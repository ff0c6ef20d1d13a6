#include "fpf/selftest.hpp"

#include <random>
#include <sstream>

namespace fpf {

namespace {

struct Suite {
    SuiteResult result;

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            result.failure_notes.push_back(what);
        }
    }
    void skip() { ++result.skipped; }
};

bool objectwise_eq(const FpFunctor& f, const FpFunctor& g,
                   const Testbed& bed) {
    return check_objectwise(f, g, bed).all_agree;
}

SuiteResult ring_solver_suite(const RingSpec& ring, std::uint64_t seed) {
    Suite s;
    s.result.name = "ring-solvers";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(0, 5), ent(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        Mat a(ring, dim(rng), dim(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.set(i, j, Scalar(ent(rng)));
        SnfResult f = smith_normal_form(a);
        s.check(f.u * a * f.v == f.s, "U*A*V = S");
        Mat k = kernel_matrix(a);
        s.check((a * k).is_zero(), "A*kernel(A) = 0");
        Mat b(ring, a.rows(), 1);
        for (int i = 0; i < b.rows(); ++i) b.set(i, 0, Scalar(ent(rng)));
        if (auto x = solve_linear(a, b)) s.check(a * *x == b, "A*X = B");
    }
    return s.result;
}

SuiteResult exactness_suite(const RingSpec& ring, std::uint64_t seed,
                            const Testbed& bed) {
    Suite s;
    s.result.name = "evaluation-exactness";
    for (std::uint64_t i = 0; i < 8; ++i) {
        NatMor alpha = random_nat(ring, seed * 131 + i);
        NatKernel k = kernel_nat(alpha);
        NatCokernel c = cokernel_nat(alpha);
        for (const auto& a : bed.modules) {
            ModMorphism ia = nat_value_map(k.incl, a);
            ModMorphism fa = nat_value_map(alpha, a);
            ModMorphism pa = nat_value_map(c.proj, a);
            s.check(is_zero_module(kernel_mor(ia).k), "kernel inclusion monic");
            s.check(is_zero_module(module_homology(ia, fa)),
                    "exact at F(A)");
            s.check(is_zero_module(module_homology(fa, pa)),
                    "exact at G(A)");
            s.check(is_zero_module(cokernel_mor(pa).c), "projection epi");
        }
    }
    return s.result;
}

SuiteResult involution_suite(const RingSpec& ring, std::uint64_t seed,
                             const Testbed& bed, const IsoBudget& budget) {
    Suite s;
    s.result.name = "duality-involution";
    for (std::uint64_t i = 0; i < 6; ++i) {
        FpFunctor f = random_functor(ring, seed * 137 + i);
        s.check(objectwise_eq(dual(dual(f)), f, bed),
                "D(D(F)) = F objectwise");
    }
    const FpModule& m = bed.modules[1 % bed.modules.size()];
    for (const FpFunctor& f :
         {rep_functor(m), tensor_functor(m), ext1_functor(m)}) {
        IsoDecision d = iso_functors(dual(dual(f)), f, budget, bed.modules);
        if (d.unknown())
            s.skip();
        else
            s.check(d.yes(), "D(D(F)) = F witnessed");
    }
    return s.result;
}

SuiteResult bridges_suite(const RingSpec& ring, const Testbed& bed) {
    Suite s;
    s.result.name = "agj-bridges";
    (void)ring;
    for (const auto& m : bed.modules) {
        s.check(objectwise_eq(dual(rep_functor(m)), tensor_functor(m), bed),
                "D(rep) = tensor at " + m.to_string());
        s.check(objectwise_eq(dual(tensor_functor(m)), rep_functor(m), bed),
                "D(tensor) = rep at " + m.to_string());
        FpFunctor tor1 = satellite(tensor_functor(m), -1);
        bool ok_e = true, ok_t = true;
        for (const auto& a : bed.modules) {
            if (!iso_modules(evaluate(dual(ext1_functor(m)), a),
                             tor_value(1, a, m)))
                ok_e = false;
            if (!iso_modules(evaluate(dual(tor1), a), ext_value(1, m, a)))
                ok_t = false;
        }
        s.check(ok_e, "D(ext1) = Tor1 at " + m.to_string());
        s.check(ok_t, "D(Tor1) = ext1 at " + m.to_string());
    }
    return s.result;
}

SuiteResult satellite_suite(const RingSpec& ring, const Testbed& bed) {
    Suite s;
    s.result.name = "satellite-identities";
    (void)ring;
    for (const auto& m : bed.modules) {
        s.check(objectwise_eq(satellite(rep_functor(m), 1), ext1_functor(m),
                              bed),
                "S^1(rep) = ext1 at " + m.to_string());
        bool tor_ok = true;
        FpFunctor tor1 = satellite(tensor_functor(m), -1);
        for (const auto& a : bed.modules)
            if (!iso_modules(evaluate(tor1, a), tor_value(1, a, m)))
                tor_ok = false;
        s.check(tor_ok, "S_1(tensor) = Tor1 at " + m.to_string());
        s.check(objectwise_eq(satellite(ext1_functor(m), 1),
                              ext1_functor(syzygy(m)), bed),
                "S^1(ext1) = ext1(syzygy) at " + m.to_string());
    }
    return s.result;
}

SuiteResult anticommutation_suite(const RingSpec& ring, std::uint64_t seed,
                                  const Testbed& bed) {
    Suite s;
    s.result.name = "anticommutation";
    for (std::uint64_t i = 0; i < 6; ++i) {
        FpFunctor f = random_functor(ring, seed * 139 + i);
        s.check(objectwise_eq(dual(satellite(f, 1)), satellite(dual(f), -1),
                              bed),
                "D S^1 = S_1 D objectwise");
        s.check(objectwise_eq(dual(satellite(f, -1)), satellite(dual(f), 1),
                              bed),
                "D S_1 = S^1 D objectwise");
    }
    return s.result;
}

SuiteResult defect_suite(const RingSpec& ring, std::uint64_t seed,
                         const Testbed& bed) {
    Suite s;
    s.result.name = "defect-laws";
    FpModule r = FpModule::free_module(ring, 1);
    for (std::uint64_t i = 0; i < 8; ++i) {
        FpFunctor f = random_functor(ring, seed * 149 + i);
        s.check(iso_modules(defect(f), evaluate(dual(f), r)),
                "w(F) = DF(R)");
        s.check(iso_modules(defect(dual(f)), evaluate(f, r)),
                "w(DF) = F(R)");
    }
    for (const auto& m : bed.modules)
        for (int n : {1, 2})
            s.check(iso_modules(defect(satellite(tensor_functor(m), -n)),
                                ext_value(n, m, r)),
                    "w(Tor_n(-,M)) = Ext^n(M,R)");
    return s.result;
}

SuiteResult values_suite(const RingSpec& ring) {
    Suite s;
    s.result.name = "ext-tor-values";
    if (ring.kind == RingKind::integers) {
        for (long a = 2; a <= 9; ++a)
            for (long b = 2; b <= 9; ++b) {
                Scalar g, sa(a), sb(b);
                mpz_gcd(g.get_mpz_t(), sa.get_mpz_t(), sb.get_mpz_t());
                FpModule ma = FpModule::cyclic(ring, a);
                FpModule mb = FpModule::cyclic(ring, b);
                FpModule mg = FpModule::cyclic(ring, g);
                s.check(iso_modules(ext_value(1, ma, mb), mg),
                        "Ext1(Z/a,Z/b) = Z/gcd");
                s.check(iso_modules(tor_value(1, ma, mb), mg),
                        "Tor1(Z/a,Z/b) = Z/gcd");
            }
    } else {
        std::vector<Scalar> divs;
        for (Scalar d = 2; d < ring.modulus; ++d)
            if (ring.modulus % d == 0) divs.push_back(d);
        for (const auto& a : divs)
            for (const auto& b : divs) {
                Scalar g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                FpModule ma = FpModule::cyclic(ring, a);
                FpModule mb = FpModule::cyclic(ring, b);
                s.check(iso_modules(hom_module(ma, mb).value(),
                                    FpModule::cyclic(ring, g)),
                        "Hom(R/a,R/b) = R/gcd");
                s.check(iso_modules(tor_value(1, ma, mb),
                                    tor_value(1, mb, ma)),
                        "Tor1 symmetry");
            }
        s.check(is_zero_module(ext_value(
                    1, FpModule::free_module(ring, 1),
                    FpModule::cyclic(ring, divs.empty() ? Scalar(0)
                                                        : divs.front()))),
                "Ext1(free,-) = 0");
    }
    return s.result;
}

SuiteResult linkage_suite(const RingSpec& ring, const Testbed& bed,
                          const IsoBudget& budget) {
    Suite s;
    s.result.name = "linkage";
    for (const auto& m : bed.modules) {
        LinkageResult lm = linked_module(m);
        if (ring.kind == RingKind::integers)
            s.check(lm.linked == is_projective(m),
                    "over Z linked = projective at " + m.to_string());
        IsoDecision lf = linked_functor(ext1_functor(m), budget, bed.modules);
        if (lf.unknown())
            s.skip();
        else
            s.check(lf.yes() == lm.linked,
                    "module/functor linkage agree at " + m.to_string());
    }
    return s.result;
}

SuiteResult gdim_suite(const RingSpec& ring, std::uint64_t seed,
                       const Testbed& bed, const IsoBudget& budget) {
    Suite s;
    s.result.name = "g-dimension";
    if (ring.kind == RingKind::integers) {
        s.skip();
        return s.result;
    }
    std::vector<FpFunctor> pool;
    for (const auto& m : bed.modules) {
        pool.push_back(ext1_functor(m));
        pool.push_back(tensor_functor(m));
    }
    pool.push_back(zero_functor(ring));
    pool.push_back(random_functor(ring, seed * 151));
    for (const auto& f : pool) {
        if (g_dim_zero(f, 3).verdict != StabilityVerdict::yes) continue;
        IsoDecision d = linked_functor(f, budget, bed.modules);
        if (d.unknown())
            s.skip();
        else
            s.check(!d.no(), "G-dimension zero functor not refuted");
    }
    return s.result;
}

}  // namespace

SelftestReport selftest(const RingSpec& ring, std::uint64_t seed,
                        const IsoBudget& budget) {
    SelftestReport r;
    r.ring = ring;
    r.seed = seed;
    Testbed bed = default_testbed(ring, seed);
    r.suites.push_back(ring_solver_suite(ring, seed));
    r.suites.push_back(exactness_suite(ring, seed, bed));
    r.suites.push_back(involution_suite(ring, seed, bed, budget));
    r.suites.push_back(bridges_suite(ring, bed));
    r.suites.push_back(satellite_suite(ring, bed));
    r.suites.push_back(anticommutation_suite(ring, seed, bed));
    r.suites.push_back(defect_suite(ring, seed, bed));
    r.suites.push_back(values_suite(ring));
    r.suites.push_back(linkage_suite(ring, bed, budget));
    r.suites.push_back(gdim_suite(ring, seed, bed, budget));
    return r;
}

}  // namespace fpf
