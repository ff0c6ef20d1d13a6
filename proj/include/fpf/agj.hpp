#ifndef FPF_AGJ_HPP
#define FPF_AGJ_HPP

#include "fpf/freyd.hpp"

// The duality D, the satellite endofunctors S^n/S_n, the defect w, injective
// resolutions by tensor functors, stability predicates and G-dimension.
//
// D is implemented directly by the tensor-kernel presentation formula
// (0 -> DF -> X(x)- -> Y(x)-), not as a derived functor of evaluation at R;
// the left satellite is D.S^1.D.  Arrow presentations are compressed between
// steps, which changes functors only up to natural isomorphism.

namespace fpf {

// n > 0 is the right satellite S^n, n < 0 the left satellite S_{|n|},
// 0 the identity.
using SatelliteIndex = int;

// Kernel of the induced map of tensor functors; flips the side marker.
// Objectwise DF(A) = Nat(F, -(x)A).
FpFunctor dual(const FpFunctor& f);

FpFunctor satellite(const FpFunctor& f, SatelliteIndex k);

// w(F) = ker(arrow); agrees with evaluate(dual(F), R).
FpModule defect(const FpFunctor& f);

// 0 -> F -> -(x)X -> -(x)Y -> -(x)Z -> 0 with X, Y, Z over the opposite
// ring; the connecting maps are kept for exactness checks.
struct TensorResolution {
    FpModule x, y, z;
    ModMorphism xy;  // X -> Y, inducing -(x)X -> -(x)Y
    ModMorphism yz;  // Y -> Z
};
TensorResolution injective_resolution(const FpFunctor& f);

// Vanishing at R decides vanishing on all projectives (additive functors
// pass finite sums and summands).
bool is_projectively_stable(const FpFunctor& f);

enum class StabilityVerdict { yes, no, unsupported };

// For self-injective rings (Z/n, GF(p)): vanishing at the indecomposable
// injectives, which are the cyclic blocks Z/p^e for p^e maximal in n.  Over
// Z there are no nonzero fp injectives, so the test is unsupported.
StabilityVerdict is_injectively_stable(const FpFunctor& f);

struct GDimReport {
    StabilityVerdict verdict = StabilityVerdict::unsupported;
    int witness_index = 0;     // satellite index where stability failed
    bool witness_left = false; // failed on the left satellite side
};

// Yes-up-to-depth iff S^k F and S_k F are projectively and injectively
// stable for all 0 <= k <= depth.
GDimReport g_dim_zero(const FpFunctor& f, int depth);

}  // namespace fpf

#endif
