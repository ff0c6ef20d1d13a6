#include "fpf/testkit.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fpf {

namespace {

Mat random_rel(const RingSpec& ring, std::mt19937_64& rng, int g, int r,
               int bound) {
    std::uniform_int_distribution<long> ent(-bound, bound);
    Mat rel(ring, g, r);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < r; ++j) rel.set(i, j, Scalar(ent(rng)));
    return rel;
}

}  // namespace

Testbed default_testbed(const RingSpec& ring, std::uint64_t seed) {
    Testbed t{ring, {}};
    t.modules.push_back(FpModule::free_module(ring, 1));
    std::mt19937_64 rng(seed);
    if (ring.kind == RingKind::integers) {
        for (long d : {2, 3, 4, 6, 8, 9})
            t.modules.push_back(FpModule::cyclic(ring, d));
        t.modules.push_back(
            FpModule::from_rel(Mat::from_rows(ring, 2, 2, {{2, 0}, {0, 3}})));
        for (int i = 0; i < 2; ++i)
            t.modules.push_back(FpModule{ring, 2, random_rel(ring, rng, 2, 3, 4)});
    } else {
        for (Scalar d = 2; d < ring.modulus; ++d)
            if (ring.modulus % d == 0)
                t.modules.push_back(FpModule::cyclic(ring, d));
        t.modules.push_back(FpModule::zero(ring));
        int bound =
            ring.modulus.fits_sint_p()
                ? std::min(7, static_cast<int>(ring.modulus.get_si()) - 1)
                : 7;
        for (int i = 0; i < 2; ++i)
            t.modules.push_back(
                FpModule{ring, 2, random_rel(ring, rng, 2, 2, bound)});
    }
    return t;
}

FpModule random_module(const RingSpec& ring, std::uint64_t seed, int max_g,
                       int max_r, int bound) {
    if (max_g < 0 || max_r < 0 || bound < 0)
        throw std::invalid_argument("random_module: negative bounds");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gd(0, max_g), rd(0, max_r);
    int g = gd(rng), r = rd(rng);
    return FpModule{ring, g, random_rel(ring, rng, g, r, bound)};
}

FpFunctor random_functor(const RingSpec& ring, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FpModule x = random_module(ring, rng(), 2, 3, 4);
    FpModule y = random_module(ring, rng(), 2, 3, 4);
    std::uniform_int_distribution<long> ent(-4, 4);
    for (int attempt = 0; attempt < 50; ++attempt) {
        Mat phi(ring, y.gens, x.gens);
        for (int i = 0; i < y.gens; ++i)
            for (int j = 0; j < x.gens; ++j) phi.set(i, j, Scalar(ent(rng)));
        if (auto arrow = validate_morphism(x, y, phi))
            return functor_of_arrow(*arrow);
    }
    return functor_of_arrow(zero_morphism(x, y));
}

NatMor random_nat(const RingSpec& ring, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FpFunctor f = random_functor(ring, rng());
    FpFunctor g = random_functor(ring, rng());
    NatHom n(f, g);
    std::uniform_int_distribution<long> ent(-3, 3);
    Mat c(ring, n.value().gens, 1);
    for (int i = 0; i < n.value().gens; ++i) c.set(i, 0, Scalar(ent(rng)));
    return n.materialize(c);
}

ObjectwiseReport check_objectwise(const FpFunctor& f, const FpFunctor& g,
                                  const Testbed& testbed, bool parallel) {
    const int n = static_cast<int>(testbed.modules.size());
    std::vector<char> agree(n, 0);
    std::vector<std::string> val_f(n), val_g(n);

    auto work = [&](int i) {
        InvariantFactors a =
            invariant_factors(evaluate(f, testbed.modules[i]));
        InvariantFactors b =
            invariant_factors(evaluate(g, testbed.modules[i]));
        std::vector<Scalar> sa = a.factors, sb = b.factors;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        agree[i] = (sa == sb) ? 1 : 0;
        val_f[i] = a.to_string();
        val_g[i] = b.to_string();
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) work(i);
    } else {
        for (int i = 0; i < n; ++i) work(i);
    }
#else
    (void)parallel;
    for (int i = 0; i < n; ++i) work(i);
#endif

    ObjectwiseReport r;
    for (int i = 0; i < n; ++i) {
        std::ostringstream os;
        os << "A[" << i << "] " << testbed.modules[i].to_string() << ": "
           << val_f[i] << " vs " << val_g[i]
           << (agree[i] ? " (agree)" : " (DISAGREE)");
        r.lines.push_back(os.str());
        if (!agree[i] && r.all_agree) {
            r.all_agree = false;
            r.first_disagreement = i;
        }
    }
    return r;
}

}  // namespace fpf
