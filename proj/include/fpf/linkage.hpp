#ifndef FPF_LINKAGE_HPP
#define FPF_LINKAGE_HPP

#include "fpf/agj.hpp"

// Horizontal linkage for modules (M = syzygy(transpose(syzygy(transpose M)))
// up to stable isomorphism) and for totally finitely presented functors
// (F = S^2 S_2 F, decided as a plain isomorphism test), plus recognition of
// extension functors.

namespace fpf {

struct LinkageTrace {
    // M, Tr M, Omega Tr M, Tr Omega Tr M, Omega Tr Omega Tr M.
    std::vector<FpModule> stages;
    std::vector<InvariantFactors> stage_invariants;
    bool stably_zero = false;  // M itself has no stable content
    bool verdict = false;
};

FpModule omega_tr(const FpModule& m);

struct LinkageResult {
    bool linked = false;
    LinkageTrace trace;
};
LinkageResult linked_module(const FpModule& m);

// coker(arrow); for ext1(M) built on the canonical arrow this recovers M.
FpModule candidate_module(const FpFunctor& f);

// Some(M) iff F is isomorphic to ext1(M) for M = candidate_module(F).
std::optional<FpModule> extension_recognize(const FpFunctor& f,
                                            const IsoBudget& budget,
                                            const std::vector<FpModule>& testbed);
std::optional<FpModule> extension_recognize(const FpFunctor& f,
                                            const IsoBudget& budget = IsoBudget{});

// Fast path through module linkage when F is recognized as an extension
// functor; otherwise the direct comparison F = S^2 S_2 F.
IsoDecision linked_functor(const FpFunctor& f, const IsoBudget& budget,
                           const std::vector<FpModule>& testbed);
IsoDecision linked_functor(const FpFunctor& f,
                           const IsoBudget& budget = IsoBudget{});

}  // namespace fpf

#endif
