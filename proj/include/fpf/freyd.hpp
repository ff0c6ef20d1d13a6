#ifndef FPF_FREYD_HPP
#define FPF_FREYD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpf/fpmod.hpp"

// The category tfp(Mod(R), Ab): a functor is an arrow f: X -> Y of fp
// modules, denoting F = coker((Y,-) -> (X,-)), i.e. F(A) = Hom(X,A)/(-.f).
// A natural transformation F -> G is a compatible pair (u, v) of module maps
// running against the arrows: u: X_G -> X_F, v: Y_G -> Y_F with
// f.u = v.g as morphisms.  All constructions are syntactic on presentations;
// the evaluation oracle is the correctness court.

namespace fpf {

enum class ProvenanceKind { derived, representable, tensor, ext1 };

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::derived;
    std::optional<FpModule> of;  // representing module for the constructors
};

struct FpFunctor {
    RingSpec ring;      // ring and side of the functor
    ModMorphism arrow;  // f: X -> Y
    Provenance tag;
    bool known_half_exact = false;

    const FpModule& x() const { return arrow.src; }
    const FpModule& y() const { return arrow.tgt; }
};

struct NatMor {
    FpFunctor src, tgt;
    ModMorphism u;  // X_tgt -> X_src
    ModMorphism v;  // Y_tgt -> Y_src
};

struct IsoDecision {
    enum class Verdict { yes, no, unknown };
    Verdict verdict = Verdict::unknown;
    // Mutually inverse pair (a: F -> G, b: G -> F) for a searched yes.
    std::optional<std::pair<NatMor, NatMor>> witness;
    // Test module with non-isomorphic evaluations for a no.
    std::optional<FpModule> certificate;
    std::string note;

    bool yes() const { return verdict == Verdict::yes; }
    bool no() const { return verdict == Verdict::no; }
    bool unknown() const { return verdict == Verdict::unknown; }
};

// Search budget for iso_functors: coefficient bound for free summands of the
// hom groups, number of seeded random candidates, and a hard cap on the
// exhaustive enumeration of finite hom groups.
struct IsoBudget {
    int coeff_bound = 3;
    int random_trials = 64;
    long max_enumeration = 4096;
    std::uint64_t seed = 0x5eed;
};

FpFunctor rep_functor(const FpModule& x);
FpFunctor tensor_functor(const FpModule& x);
FpFunctor ext1_functor(const FpModule& m);
FpFunctor zero_functor(RingSpec ring);
// Arbitrary arrow, tagged as derived.
FpFunctor functor_of_arrow(const ModMorphism& arrow);

enum class InducedKind { representable, tensor, ext1 };

// Naturality pair induced by a module map: contravariant for representable
// and ext1 (rep(N) -> rep(M), ext1(N) -> ext1(M)), covariant for tensor.
NatMor induced_nat(InducedKind kind, const ModMorphism& phi);

NatMor identity_nat(const FpFunctor& f);
NatMor zero_nat(const FpFunctor& f, const FpFunctor& g);
NatMor compose_nat(const NatMor& beta, const NatMor& alpha);  // beta after alpha
NatMor sub_nat(const NatMor& a, const NatMor& b);
// Pair condition f.u = v.g, as morphisms.
bool valid_nat(const NatMor& a);

FpModule evaluate(const FpFunctor& f, const FpModule& a);
// F applied to a module map: F(A) -> F(A').
ModMorphism evaluate_on_morphism(const FpFunctor& f, const ModMorphism& phi);
// Component of a natural transformation at a test module.
ModMorphism nat_value_map(const NatMor& alpha, const FpModule& a);

// True iff u factors through the target's arrow, i.e. the transformation is
// the zero map of functors.
bool nat_is_zero(const NatMor& alpha);
bool nats_equal(const NatMor& a, const NatMor& b);

// Nat(F,G) as an fp module: the kernel of G(f): G(X_F) -> G(Y_F), with
// materialization of elements as actual pairs and the reverse coordinate map.
class NatHom {
  public:
    NatHom(const FpFunctor& f, const FpFunctor& g);

    const FpModule& value() const { return n_.k; }
    NatMor materialize(const Mat& coeffs) const;
    // Coordinates of a valid transformation F -> G in this module.
    Mat coords_of(const NatMor& alpha) const;

  private:
    FpFunctor f_, g_;
    HomModule hom_xg_xf_;
    FpModule gxf_;  // evaluation presentation G(X_F)
    KernelResult n_;
};

inline NatHom nat_hom(const FpFunctor& f, const FpFunctor& g) {
    return NatHom(f, g);
}

struct NatKernel {
    FpFunctor k;
    NatMor incl;
};
NatKernel kernel_nat(const NatMor& alpha);

struct NatCokernel {
    FpFunctor c;
    NatMor proj;
};
NatCokernel cokernel_nat(const NatMor& alpha);

// True iff the arrow is a split monomorphism (with a well-definedness
// certificate for the retraction), which is equivalent to F = 0.
bool is_zero_functor(const FpFunctor& f);

// Isomorphic replacement of the arrow by minimized presentations; detects the
// zero functor.  Changes the functor only up to natural isomorphism.
FpFunctor compress_functor(const FpFunctor& f);

// Three-valued isomorphism decision: sound refutation by evaluation on the
// testbed, budgeted witness search through the hom groups.
IsoDecision iso_functors(const FpFunctor& f, const FpFunctor& g,
                         const IsoBudget& budget,
                         const std::vector<FpModule>& testbed);
// Overload using the default testbed of the ring (see testkit).
IsoDecision iso_functors(const FpFunctor& f, const FpFunctor& g,
                         const IsoBudget& budget = IsoBudget{});

}  // namespace fpf

#endif
