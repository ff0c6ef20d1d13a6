#ifndef FPF_FPMOD_HPP
#define FPF_FPMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpf/ring.hpp"

// Finitely presented modules and their morphisms.  A module is R^gens modulo
// the column span of its relation matrix; a morphism is a generator matrix
// together with a well-definedness certificate.  Zero generators and zero
// relations are legal throughout.

namespace fpf {

struct FpModule {
    RingSpec ring;
    int gens = 0;
    Mat rel;  // gens x r, columns are relations

    static FpModule free_module(RingSpec ring, int g);
    static FpModule zero(RingSpec ring) { return free_module(ring, 0); }
    static FpModule from_rel(const Mat& rel);
    // R/(d), presented by the single relation column [d].
    static FpModule cyclic(RingSpec ring, const Scalar& d);

    std::string to_string() const;
};

// phi maps generators of src to column combinations of tgt generators;
// cert witnesses phi * src.rel = tgt.rel * cert.
struct ModMorphism {
    FpModule src, tgt;
    Mat phi;   // tgt.gens x src.gens
    Mat cert;  // tgt.rel.cols x src.rel.cols
};

// Diagonal invariants d1 | d2 | ... of a presentation; 0 entries are free
// rank contributions (over Z and GF(p)), and over Z/n every entry divides n.
struct InvariantFactors {
    RingSpec ring;
    std::vector<Scalar> factors;

    bool trivial() const { return factors.empty(); }
    std::string to_string() const;  // "2|4" style chain
};

std::optional<ModMorphism> validate_morphism(const FpModule& src,
                                             const FpModule& tgt,
                                             const Mat& phi);
// As above but throws std::logic_error when no certificate exists; for maps
// that are well defined by construction.
ModMorphism must_morphism(const FpModule& src, const FpModule& tgt,
                          const Mat& phi);

ModMorphism identity_morphism(const FpModule& m);
ModMorphism zero_morphism(const FpModule& src, const FpModule& tgt);
ModMorphism compose(const ModMorphism& g, const ModMorphism& f);  // g after f
ModMorphism add_morphisms(const ModMorphism& f, const ModMorphism& g);
ModMorphism sub_morphisms(const ModMorphism& f, const ModMorphism& g);

// Zero as a map of modules, i.e. phi lands in the relation span of tgt.
bool is_zero_morphism(const ModMorphism& f);
bool morphisms_equal(const ModMorphism& f, const ModMorphism& g);

struct DirectSum {
    FpModule sum;
    ModMorphism inj1, inj2;    // components into the sum
    ModMorphism proj1, proj2;  // sum onto components
};
DirectSum direct_sum(const FpModule& m, const FpModule& n);
// Block-diagonal sum of morphisms, relative to direct_sum presentations.
ModMorphism direct_sum_morphism(const ModMorphism& f, const ModMorphism& g);

struct KernelResult {
    FpModule k;
    ModMorphism incl;  // k -> src, monic onto ker f
};
KernelResult kernel_mor(const ModMorphism& f);

struct CokernelResult {
    FpModule c;  // tgt generators with relations [tgt.rel | phi]
    ModMorphism proj;
};
CokernelResult cokernel_mor(const ModMorphism& f);

// Hom(M,N) as an fp module over a commutative base, with materialization of
// elements as actual morphisms and the inverse coordinate map.
class HomModule {
  public:
    HomModule(const FpModule& m, const FpModule& n);

    const FpModule& value() const { return h_; }
    int num_gens() const { return h_.gens; }
    Mat basis(int j) const;  // n.gens x m.gens generator matrix

    // coeffs: num_gens x 1 column over the ring.
    ModMorphism materialize(const Mat& coeffs) const;
    // Coordinates of a well defined generator matrix; nullopt when phi is not
    // a morphism M -> N.
    std::optional<Mat> express(const Mat& phi) const;

  private:
    FpModule m_, n_;
    Mat kphi_, klam_;  // stacked vec(phi) / vec(lambda) generator columns
    FpModule h_;
};

inline HomModule hom_module(const FpModule& m, const FpModule& n) {
    return HomModule(m, n);
}

FpModule tensor_module(const FpModule& m, const FpModule& n);
// id_A tensor g : A(x)X -> A(x)Y on Kronecker presentations.
ModMorphism tensor_map(const FpModule& a, const ModMorphism& g);

// Tr(M) = coker of the transposed presentation; presentation-level and only
// stably well defined.  Flips the side marker.
FpModule transpose(const FpModule& m);

// Syzygy module: generators are the relation columns inside R^gens,
// relations are their syzygies.
FpModule syzygy(const FpModule& m);
ModMorphism syzygy_inclusion(const FpModule& m);  // syzygy(m) -> free(gens)

InvariantFactors invariant_factors(const FpModule& m);
bool is_zero_module(const FpModule& m);
bool iso_modules(const FpModule& m, const FpModule& n);
// Isomorphism after deleting projective cyclic summands on both sides.
bool stable_iso(const FpModule& m, const FpModule& n);
bool is_projective(const FpModule& m);
// Projectivity of a single cyclic invariant (0 = free over Z/GF(p)).
bool cyclic_factor_projective(const RingSpec& ring, const Scalar& d);

// Ext^n / Tor_n computed from the iterated-syzygy free resolution of m,
// returned up to iso_modules.
FpModule ext_value(int n, const FpModule& m, const FpModule& nn);
FpModule tor_value(int n, const FpModule& m, const FpModule& nn);

struct LiftedSyzygy {
    Mat f_p;               // free cover square: cover_tgt . f_p = phi . cover_src
    ModMorphism omega_f;   // syzygy(src) -> syzygy(tgt)
};
LiftedSyzygy lift_syzygy(const ModMorphism& f);

struct MinimizedPresentation {
    FpModule m;  // diagonal presentation, unit factors dropped
    ModMorphism to_min, from_min;  // mutually inverse isomorphisms
};
MinimizedPresentation minimize_presentation(const FpModule& m);

// ker(g)/im(f) for a composable pair with g.f = 0 as morphisms.
FpModule module_homology(const ModMorphism& f, const ModMorphism& g);

namespace detail {
// Presentation of span(u)/span(v) inside R^n, where colspan(v) is contained
// in colspan(u); generators are u's columns.
FpModule subquotient(const RingSpec& ring, const Mat& u, const Mat& v);
// Free resolution differentials d1..d_{len} with d1 = rel.
std::vector<Mat> resolution_differentials(const FpModule& m, int len);
}  // namespace detail

}  // namespace fpf

#endif
