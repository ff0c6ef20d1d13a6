#include "fpf/linkage.hpp"

#include "fpf/testkit.hpp"

namespace fpf {

FpModule omega_tr(const FpModule& m) { return syzygy(transpose(m)); }

LinkageResult linked_module(const FpModule& m) {
    LinkageTrace t;
    t.stages.push_back(m);
    for (int step = 0; step < 2; ++step) {
        t.stages.push_back(transpose(t.stages.back()));
        t.stages.push_back(syzygy(t.stages.back()));
    }
    for (const auto& s : t.stages)
        t.stage_invariants.push_back(invariant_factors(s));
    t.stably_zero = is_projective(m);
    t.verdict = stable_iso(m, t.stages.back());
    return LinkageResult{t.verdict, t};
}

FpModule candidate_module(const FpFunctor& f) {
    return cokernel_mor(f.arrow).c;
}

std::optional<FpModule> extension_recognize(
    const FpFunctor& f, const IsoBudget& budget,
    const std::vector<FpModule>& testbed) {
    FpModule m = candidate_module(f);
    // m inherits f's ring and side, so ext1(m) lives in the same category.
    if (iso_functors(f, ext1_functor(m), budget, testbed).yes()) return m;
    return std::nullopt;
}

std::optional<FpModule> extension_recognize(const FpFunctor& f,
                                            const IsoBudget& budget) {
    return extension_recognize(f, budget,
                               default_testbed(f.ring, budget.seed).modules);
}

IsoDecision linked_functor(const FpFunctor& f, const IsoBudget& budget,
                           const std::vector<FpModule>& testbed) {
    if (auto m = extension_recognize(f, budget, testbed)) {
        LinkageResult lr = linked_module(*m);
        IsoDecision d;
        d.verdict = lr.linked ? IsoDecision::Verdict::yes
                              : IsoDecision::Verdict::no;
        d.note = lr.linked
                     ? "extension functor of a horizontally linked module"
                     : "extension functor of a module that is not linked";
        return d;
    }
    FpFunctor ss = satellite(satellite(f, -2), 2);
    IsoDecision d = iso_functors(f, ss, budget, testbed);
    if (d.yes()) d.note = "isomorphism F = S^2 S_2 F witnessed";
    return d;
}

IsoDecision linked_functor(const FpFunctor& f, const IsoBudget& budget) {
    return linked_functor(f, budget,
                          default_testbed(f.ring, budget.seed).modules);
}

}  // namespace fpf
