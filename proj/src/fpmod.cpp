#include "fpf/fpmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

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

}  // namespace

FpModule FpModule::free_module(RingSpec ring, int g) {
    require(g >= 0, "free_module: negative rank");
    return FpModule{ring, g, Mat(ring, g, 0)};
}

FpModule FpModule::from_rel(const Mat& rel) {
    return FpModule{rel.ring(), rel.rows(), rel};
}

FpModule FpModule::cyclic(RingSpec ring, const Scalar& d) {
    Mat rel(ring, 1, 1);
    rel.set(0, 0, d);
    return FpModule{ring, 1, rel};
}

std::string FpModule::to_string() const {
    std::ostringstream os;
    os << "mod(" << ring.to_string() << "; " << gens << " gens, "
       << rel.cols() << " rels)";
    return os.str();
}

std::string InvariantFactors::to_string() const {
    if (factors.empty()) return "(trivial)";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "|";
        s += factors[i].get_str();
    }
    return s;
}

std::optional<ModMorphism> validate_morphism(const FpModule& src,
                                             const FpModule& tgt,
                                             const Mat& phi) {
    require(src.ring.same_kind(tgt.ring), "validate_morphism: ring mismatch");
    require(phi.rows() == tgt.gens && phi.cols() == src.gens,
            "validate_morphism: dimension mismatch");
    auto cert = solve_linear(tgt.rel, phi * src.rel);
    if (!cert) return std::nullopt;
    return ModMorphism{src, tgt, phi, *cert};
}

ModMorphism must_morphism(const FpModule& src, const FpModule& tgt,
                          const Mat& phi) {
    auto f = validate_morphism(src, tgt, phi);
    expect(f.has_value(), "must_morphism: map is not well defined");
    return *f;
}

ModMorphism identity_morphism(const FpModule& m) {
    return ModMorphism{m, m, Mat::ident(m.ring, m.gens),
                       Mat::ident(m.ring, m.rel.cols())};
}

ModMorphism zero_morphism(const FpModule& src, const FpModule& tgt) {
    return ModMorphism{src, tgt, Mat(tgt.ring, tgt.gens, src.gens),
                       Mat(tgt.ring, tgt.rel.cols(), src.rel.cols())};
}

ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
    require(g.src.gens == f.tgt.gens && g.src.rel == f.tgt.rel,
            "compose: middle modules differ");
    return ModMorphism{f.src, g.tgt, g.phi * f.phi, g.cert * f.cert};
}

ModMorphism add_morphisms(const ModMorphism& f, const ModMorphism& g) {
    return ModMorphism{f.src, f.tgt, f.phi + g.phi, f.cert + g.cert};
}

ModMorphism sub_morphisms(const ModMorphism& f, const ModMorphism& g) {
    return ModMorphism{f.src, f.tgt, f.phi - g.phi, f.cert - g.cert};
}

bool is_zero_morphism(const ModMorphism& f) {
    return solve_linear(f.tgt.rel, f.phi).has_value();
}

bool morphisms_equal(const ModMorphism& f, const ModMorphism& g) {
    require(f.src.gens == g.src.gens && f.tgt.gens == g.tgt.gens,
            "morphisms_equal: shape mismatch");
    return solve_linear(f.tgt.rel, f.phi - g.phi).has_value();
}

DirectSum direct_sum(const FpModule& m, const FpModule& n) {
    require(m.ring.same_kind(n.ring), "direct_sum: ring mismatch");
    const RingSpec& ring = m.ring;
    Mat top = hstack(m.rel, Mat(ring, m.gens, n.rel.cols()));
    Mat bot = hstack(Mat(ring, n.gens, m.rel.cols()), n.rel);
    FpModule sum{ring, m.gens + n.gens, vstack(top, bot)};

    Mat i1 = vstack(Mat::ident(ring, m.gens), Mat(ring, n.gens, m.gens));
    Mat i2 = vstack(Mat(ring, m.gens, n.gens), Mat::ident(ring, n.gens));
    Mat p1 = hstack(Mat::ident(ring, m.gens), Mat(ring, m.gens, n.gens));
    Mat p2 = hstack(Mat(ring, n.gens, m.gens), Mat::ident(ring, n.gens));

    Mat c1 = vstack(Mat::ident(ring, m.rel.cols()),
                    Mat(ring, n.rel.cols(), m.rel.cols()));
    Mat c2 = vstack(Mat(ring, m.rel.cols(), n.rel.cols()),
                    Mat::ident(ring, n.rel.cols()));
    Mat q1 = hstack(Mat::ident(ring, m.rel.cols()),
                    Mat(ring, m.rel.cols(), n.rel.cols()));
    Mat q2 = hstack(Mat(ring, n.rel.cols(), m.rel.cols()),
                    Mat::ident(ring, n.rel.cols()));

    return DirectSum{sum, ModMorphism{m, sum, i1, c1},
                     ModMorphism{n, sum, i2, c2}, ModMorphism{sum, m, p1, q1},
                     ModMorphism{sum, n, p2, q2}};
}

namespace {

Mat block_diag(const RingSpec& ring, const Mat& a, const Mat& b) {
    Mat top = hstack(a, Mat(ring, a.rows(), b.cols()));
    Mat bot = hstack(Mat(ring, b.rows(), a.cols()), b);
    return vstack(top, bot);
}

}  // namespace

ModMorphism direct_sum_morphism(const ModMorphism& f, const ModMorphism& g) {
    FpModule s = direct_sum(f.src, g.src).sum;
    FpModule t = direct_sum(f.tgt, g.tgt).sum;
    const RingSpec& ring = s.ring;
    return ModMorphism{s, t, block_diag(ring, f.phi, g.phi),
                       block_diag(ring, f.cert, g.cert)};
}

KernelResult kernel_mor(const ModMorphism& f) {
    const RingSpec& ring = f.src.ring;
    // Elements of src killed in tgt: phi*x lands in the relation span.
    Mat k1 = kernel_matrix(hstack(f.phi, f.tgt.rel));
    Mat p = take_rows(k1, 0, f.src.gens);
    // Relations among those elements, with certificates for the inclusion.
    Mat k2 = kernel_matrix(hstack(p, f.src.rel));
    Mat rel_k = take_rows(k2, 0, p.cols());
    Mat cert = -take_rows(k2, p.cols(), f.src.rel.cols());
    FpModule k{ring, p.cols(), rel_k};
    return KernelResult{k, ModMorphism{k, f.src, p, cert}};
}

CokernelResult cokernel_mor(const ModMorphism& f) {
    const RingSpec& ring = f.tgt.ring;
    FpModule c{ring, f.tgt.gens, hstack(f.tgt.rel, f.phi)};
    Mat cert = vstack(Mat::ident(ring, f.tgt.rel.cols()),
                      Mat(ring, f.src.gens, f.tgt.rel.cols()));
    return CokernelResult{
        c, ModMorphism{f.tgt, c, Mat::ident(ring, f.tgt.gens), cert}};
}

HomModule::HomModule(const FpModule& m, const FpModule& n) : m_(m), n_(n) {
    require(m.ring.same_kind(n.ring), "hom_module: ring mismatch");
    const RingSpec& ring = m.ring;
    const Mat& a = m.rel;
    const Mat& b = n.rel;
    // Well-definedness: phi*a = b*lambda, vectorized over (phi, lambda).
    Mat c = hstack(kron(a.transposed(), Mat::ident(ring, n.gens)),
                   kron(Mat::ident(ring, a.cols()), b));
    Mat k = kernel_matrix(c);
    kphi_ = take_rows(k, 0, m.gens * n.gens);
    klam_ = take_rows(k, m.gens * n.gens, a.cols() * b.cols());
    h_ = detail::subquotient(ring, kphi_,
                             kron(Mat::ident(ring, m.gens), b));
}

Mat HomModule::basis(int j) const {
    return unvec(take_cols(kphi_, j, 1), m_.ring, n_.gens, m_.gens);
}

ModMorphism HomModule::materialize(const Mat& coeffs) const {
    Mat phi = unvec(kphi_ * coeffs, m_.ring, n_.gens, m_.gens);
    Mat cert = unvec(-(klam_ * coeffs), m_.ring, n_.rel.cols(), m_.rel.cols());
    return ModMorphism{m_, n_, phi, cert};
}

std::optional<Mat> HomModule::express(const Mat& phi) const {
    return solve_linear(kphi_, vec_of(phi).with_ring(m_.ring));
}

FpModule tensor_module(const FpModule& m, const FpModule& n) {
    require(m.ring.same_kind(n.ring), "tensor_module: ring mismatch");
    const RingSpec& ring = m.ring;
    Mat rel = hstack(kron(m.rel, Mat::ident(ring, n.gens)),
                     kron(Mat::ident(ring, m.gens), n.rel));
    return FpModule{ring, m.gens * n.gens, rel};
}

ModMorphism tensor_map(const FpModule& a, const ModMorphism& g) {
    FpModule src = tensor_module(a, g.src);
    FpModule tgt = tensor_module(a, g.tgt);
    return must_morphism(src, tgt, kron(Mat::ident(a.ring, a.gens), g.phi));
}

FpModule transpose(const FpModule& m) {
    RingSpec op = m.ring.opposite();
    return FpModule{op, m.rel.cols(), m.rel.transposed().with_ring(op)};
}

FpModule syzygy(const FpModule& m) {
    return FpModule{m.ring, m.rel.cols(), kernel_matrix(m.rel)};
}

ModMorphism syzygy_inclusion(const FpModule& m) {
    return must_morphism(syzygy(m), FpModule::free_module(m.ring, m.gens),
                         m.rel);
}

InvariantFactors invariant_factors(const FpModule& m) {
    const RingSpec& ring = m.ring;
    std::vector<Scalar> out;
    if (ring.kind == RingKind::integers_mod) {
        // Augment with n*I so that the lifted cokernel is the module itself.
        Mat lifted = m.rel.with_ring(ring_z());
        Mat ni = Mat::ident(ring_z(), m.gens);
        for (int i = 0; i < m.gens; ++i) ni.set(i, i, ring.modulus);
        SnfResult f = smith_normal_form(hstack(lifted, ni));
        for (int i = 0; i < m.gens; ++i) {
            const Scalar& d = f.s.at(i, i);
            if (d != 1) out.push_back(d);
        }
    } else {
        SnfResult f = smith_normal_form(m.rel);
        int diag = std::min(m.gens, m.rel.cols());
        int nonzero = 0;
        for (int i = 0; i < diag; ++i) {
            const Scalar& d = f.s.at(i, i);
            if (d == 0) continue;
            ++nonzero;
            if (d != 1) out.push_back(d);
        }
        for (int i = 0; i < m.gens - nonzero; ++i) out.push_back(0);
    }
    return InvariantFactors{ring, out};
}

bool is_zero_module(const FpModule& m) {
    return invariant_factors(m).trivial();
}

namespace {

std::vector<Scalar> sorted_factors(const FpModule& m) {
    auto f = invariant_factors(m).factors;
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

bool iso_modules(const FpModule& m, const FpModule& n) {
    require(m.ring.same_kind(n.ring), "iso_modules: ring mismatch");
    return sorted_factors(m) == sorted_factors(n);
}

bool cyclic_factor_projective(const RingSpec& ring, const Scalar& d) {
    switch (ring.kind) {
        case RingKind::integers:
            return d == 0;
        case RingKind::prime_field:
            return true;
        case RingKind::integers_mod: {
            // R/(d) splits off as a CRT factor exactly when d and n/d are
            // coprime; d = n is the free case.
            Scalar q = ring.modulus / d;
            Scalar g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
            return g == 1;
        }
    }
    return false;
}

namespace {

std::vector<Scalar> stable_factors(const FpModule& m) {
    std::vector<Scalar> out;
    for (const auto& d : invariant_factors(m).factors)
        if (!cyclic_factor_projective(m.ring, d)) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool stable_iso(const FpModule& m, const FpModule& n) {
    require(m.ring.same_kind(n.ring), "stable_iso: ring mismatch");
    return stable_factors(m) == stable_factors(n);
}

bool is_projective(const FpModule& m) {
    return stable_factors(m).empty();
}

namespace detail {

FpModule subquotient(const RingSpec& ring, const Mat& u, const Mat& v) {
    Mat k = kernel_matrix(hstack(u, v));
    return FpModule{ring, u.cols(), take_rows(k, 0, u.cols())};
}

std::vector<Mat> resolution_differentials(const FpModule& m, int len) {
    std::vector<Mat> d;
    d.push_back(m.rel);
    while (static_cast<int>(d.size()) < len)
        d.push_back(kernel_matrix(d.back()));
    return d;
}

}  // namespace detail

FpModule ext_value(int n, const FpModule& m, const FpModule& nn) {
    require(n >= 0, "ext_value: n must be >= 0");
    require(m.ring.same_kind(nn.ring), "ext_value: ring mismatch");
    if (n == 0) return hom_module(m, nn).value();
    const RingSpec& ring = m.ring;
    auto d = detail::resolution_differentials(m, n + 1);
    const Mat& dq = d[n - 1];
    const Mat& dq1 = d[n];
    Mat id_g = Mat::ident(ring, nn.gens);
    Mat cochains = kernel_matrix(
        hstack(kron(dq1.transposed(), id_g),
               kron(Mat::ident(ring, dq1.cols()), nn.rel)));
    Mat u = take_rows(cochains, 0, nn.gens * dq.cols());
    Mat v = hstack(kron(dq.transposed(), id_g),
                   kron(Mat::ident(ring, dq.cols()), nn.rel));
    return detail::subquotient(ring, u, v);
}

FpModule tor_value(int n, const FpModule& m, const FpModule& nn) {
    require(n >= 0, "tor_value: n must be >= 0");
    require(m.ring.same_kind(nn.ring), "tor_value: ring mismatch");
    if (n == 0) return tensor_module(m, nn);
    const RingSpec& ring = m.ring;
    auto d = detail::resolution_differentials(m, n + 1);
    const Mat& dq = d[n - 1];
    const Mat& dq1 = d[n];
    Mat id_g = Mat::ident(ring, nn.gens);
    Mat cycles = kernel_matrix(
        hstack(kron(dq, id_g), kron(Mat::ident(ring, dq.rows()), nn.rel)));
    Mat u = take_rows(cycles, 0, nn.gens * dq.cols());
    Mat v = hstack(kron(dq1, id_g),
                   kron(Mat::ident(ring, dq.cols()), nn.rel));
    return detail::subquotient(ring, u, v);
}

LiftedSyzygy lift_syzygy(const ModMorphism& f) {
    FpModule os = syzygy(f.src);
    FpModule ot = syzygy(f.tgt);
    return LiftedSyzygy{f.phi, must_morphism(os, ot, f.cert)};
}

MinimizedPresentation minimize_presentation(const FpModule& m) {
    const RingSpec& ring = m.ring;
    SnfResult f = smith_normal_form(m.rel);
    int diag = std::min(m.gens, m.rel.cols());

    // Generator i of the rotated presentation carries relation d_i (or none).
    std::vector<int> keep;
    std::vector<Scalar> ds;
    for (int i = 0; i < m.gens; ++i) {
        Scalar d = (i < diag) ? f.s.at(i, i) : Scalar(0);
        d = ring.canon(d);
        if (d != 0 && ring.is_unit(d)) continue;
        keep.push_back(i);
        ds.push_back(d);
    }
    int k = static_cast<int>(keep.size());
    Mat rel_min(ring, k, 0);
    for (int c = 0; c < k; ++c) {
        if (ds[c] == 0) continue;
        Mat col(ring, k, 1);
        col.set(c, 0, ds[c]);
        rel_min = hstack(rel_min, col);
    }
    FpModule mmin{ring, k, rel_min};

    Mat sel(ring, k, m.gens);
    Mat emb(ring, m.gens, k);
    for (int c = 0; c < k; ++c) {
        sel.set(c, keep[c], 1);
        emb.set(keep[c], c, 1);
    }
    Mat u = f.u;
    Mat u_inv = must_solve(u, Mat::ident(ring, m.gens),
                           "minimize_presentation: U not invertible");
    ModMorphism to_min = must_morphism(m, mmin, sel * u);
    ModMorphism from_min = must_morphism(mmin, m, u_inv * emb);
    return MinimizedPresentation{mmin, to_min, from_min};
}

FpModule module_homology(const ModMorphism& f, const ModMorphism& g) {
    require(f.tgt.gens == g.src.gens && f.tgt.rel == g.src.rel,
            "module_homology: maps not composable");
    KernelResult k = kernel_mor(g);
    Mat sol = must_solve(hstack(k.incl.phi, g.src.rel), f.phi,
                         "module_homology: image not inside kernel");
    Mat t = take_rows(sol, 0, k.k.gens);
    return FpModule{f.src.ring, k.k.gens, hstack(k.k.rel, t)};
}

}  // namespace fpf
