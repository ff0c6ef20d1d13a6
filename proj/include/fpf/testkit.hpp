#ifndef FPF_TESTKIT_HPP
#define FPF_TESTKIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpf/freyd.hpp"

// Seeded generators and the objectwise evaluation oracle backing every
// "agrees objectwise" claim.  Objectwise agreement on the testbed is used
// only as refutation or necessary evidence, never as proof of isomorphism.

namespace fpf {

struct Testbed {
    RingSpec ring;
    std::vector<FpModule> modules;  // nonempty, contains free(R,1)
};

// Defaults: over Z - free(1), Z/2, Z/3, Z/4, Z/6, Z/8, Z/9, Z/2+Z/3, plus two
// seeded random 2x3 presentations with entries in [-4,4]; over Z/n and GF(p)
// - free(1), the cyclic quotients R/(d) for proper divisors d | n, the zero
// module, plus two seeded random presentations.
Testbed default_testbed(const RingSpec& ring, std::uint64_t seed);

FpModule random_module(const RingSpec& ring, std::uint64_t seed, int max_g,
                       int max_r, int bound);
FpFunctor random_functor(const RingSpec& ring, std::uint64_t seed);
// Natural transformations need compatible pairs, so they are sampled from
// the hom group of two seeded random functors.
NatMor random_nat(const RingSpec& ring, std::uint64_t seed);

struct ObjectwiseReport {
    bool all_agree = true;
    int first_disagreement = -1;  // index into the testbed
    std::vector<std::string> lines;  // per-module outcome
};

// Per-module iso_modules comparison of evaluations; a disagreement is a
// sound No-certificate for iso_functors.  Runs the testbed in parallel when
// parallel = true; output order is deterministic either way.
ObjectwiseReport check_objectwise(const FpFunctor& f, const FpFunctor& g,
                                  const Testbed& testbed,
                                  bool parallel = true);

}  // namespace fpf

#endif
