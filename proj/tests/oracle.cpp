#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using fpf::Mat;
using fpf::ring_z;
using fpf::RingKind;
using fpf::RingSpec;
using fpf::Scalar;

namespace {

void swap_rows_of(Mat& a, int x, int y) {
    if (x == y) return;
    for (int j = 0; j < a.cols(); ++j) {
        Scalar tmp = a.at(x, j);
        a.set(x, j, a.at(y, j));
        a.set(y, j, tmp);
    }
}

void swap_cols_of(Mat& a, int x, int y) {
    if (x == y) return;
    for (int i = 0; i < a.rows(); ++i) {
        Scalar tmp = a.at(i, x);
        a.set(i, x, a.at(i, y));
        a.set(i, y, tmp);
    }
}

// Textbook reduction at position t (Cohen-style): divide down the pivot
// column and row, swapping any nonzero remainder into the pivot slot so the
// pivot strictly shrinks, then enforce divisibility of the trailing block.
void reduce_at(Mat& s, Mat& u, Mat& v, int t) {
    const int m = s.rows(), n = s.cols();
    for (;;) {
        int pi = -1, pj = -1;
        for (int i = t; i < m && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (s.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) return;
        swap_rows_of(s, t, pi);
        swap_rows_of(u, t, pi);
        swap_cols_of(s, t, pj);
        swap_cols_of(v, t, pj);

        bool restart = false;
        for (int i = t + 1; i < m && !restart; ++i) {
            if (s.at(i, t) == 0) continue;
            Scalar q;
            mpz_tdiv_q(q.get_mpz_t(), s.at(i, t).get_mpz_t(),
                       s.at(t, t).get_mpz_t());
            for (int j = 0; j < n; ++j)
                s.set(i, j, s.at(i, j) - q * s.at(t, j));
            for (int j = 0; j < u.cols(); ++j)
                u.set(i, j, u.at(i, j) - q * u.at(t, j));
            if (s.at(i, t) != 0) {
                swap_rows_of(s, t, i);
                swap_rows_of(u, t, i);
                restart = true;
            }
        }
        if (restart) continue;
        for (int j = t + 1; j < n && !restart; ++j) {
            if (s.at(t, j) == 0) continue;
            Scalar q;
            mpz_tdiv_q(q.get_mpz_t(), s.at(t, j).get_mpz_t(),
                       s.at(t, t).get_mpz_t());
            for (int i = 0; i < m; ++i)
                s.set(i, j, s.at(i, j) - q * s.at(i, t));
            for (int i = 0; i < v.rows(); ++i)
                v.set(i, j, v.at(i, j) - q * v.at(i, t));
            if (s.at(t, j) != 0) {
                swap_cols_of(s, t, j);
                swap_cols_of(v, t, j);
                restart = true;
            }
        }
        if (restart) continue;

        bool fix = false;
        for (int i = t + 1; i < m && !fix; ++i)
            for (int j = t + 1; j < n; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    for (int jj = 0; jj < n; ++jj)
                        s.set(t, jj, s.at(t, jj) + s.at(i, jj));
                    for (int jj = 0; jj < u.cols(); ++jj)
                        u.set(t, jj, u.at(t, jj) + u.at(i, jj));
                    fix = true;
                    break;
                }
        if (!fix) return;
    }
}

Scalar abs_scalar(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

}  // namespace

SnfZ snf_z(const Mat& a) {
    RingSpec z = ring_z();
    Mat s = a.with_ring(z);
    Mat u = Mat::ident(z, a.rows());
    Mat v = Mat::ident(z, a.cols());
    int steps = std::min(a.rows(), a.cols());
    for (int t = 0; t < steps; ++t) reduce_at(s, u, v, t);
    for (int t = 0; t < steps; ++t)
        if (s.at(t, t) < 0) {
            for (int j = 0; j < s.cols(); ++j) s.set(t, j, -s.at(t, j));
            for (int j = 0; j < u.cols(); ++j) u.set(t, j, -u.at(t, j));
        }
    return SnfZ{s, u, v};
}

Mat kernel_z(const Mat& a) {
    SnfZ f = snf_z(a);
    int diag = std::min(a.rows(), a.cols());
    std::vector<int> keep;
    for (int j = 0; j < a.cols(); ++j)
        if (j >= diag || f.s.at(j, j) == 0) keep.push_back(j);
    Mat k(ring_z(), a.cols(), static_cast<int>(keep.size()));
    for (int c = 0; c < static_cast<int>(keep.size()); ++c)
        for (int i = 0; i < a.cols(); ++i) k.set(i, c, f.v.at(i, keep[c]));
    return k;
}

Mat solve_z(const Mat& a, const Mat& b) {
    SnfZ f = snf_z(a);
    Mat c = f.u * b.with_ring(ring_z());
    int diag = std::min(a.rows(), a.cols());
    Mat y(ring_z(), a.cols(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            if (i < diag && f.s.at(i, i) != 0) {
                Scalar q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                            c.at(i, j).get_mpz_t(), f.s.at(i, i).get_mpz_t());
                if (r != 0) throw std::logic_error("oracle solve_z: no solution");
                y.set(i, j, q);
            } else if (c.at(i, j) != 0) {
                throw std::logic_error("oracle solve_z: no solution");
            }
        }
    return f.v * y;
}

std::vector<Scalar> coker_invariants_z(int k, const Mat& t) {
    SnfZ f = snf_z(t);
    int diag = std::min(t.rows(), t.cols());
    std::vector<Scalar> out;
    int nonzero = 0;
    for (int i = 0; i < diag; ++i) {
        Scalar d = abs_scalar(f.s.at(i, i));
        if (d == 0) continue;
        ++nonzero;
        if (d != 1) out.push_back(d);
    }
    for (int i = 0; i < k - nonzero; ++i) out.push_back(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Mat lift(const Mat& a) { return a.with_ring(ring_z()); }

Mat n_ident(int dim, const Scalar& n) {
    Mat m = Mat::ident(ring_z(), dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, n);
    return m;
}

}  // namespace

std::vector<Scalar> subquotient_invariants(const RingSpec& ring, const Mat& q,
                                           const Mat& rel3, const Mat& p,
                                           const Mat& rel2) {
    bool modular = ring.kind != RingKind::integers;
    const int dim2 = q.cols();
    const int dim3 = q.rows();

    Mat w = hstack(lift(q), lift(rel3));
    if (modular) w = hstack(w, n_ident(dim3, ring.modulus));
    Mat b = kernel_z(w);
    Mat bx = take_rows(b, 0, dim2);

    Mat quot = hstack(lift(p), lift(rel2));
    if (modular) quot = hstack(quot, n_ident(dim2, ring.modulus));

    // Express each quotient column in the generator columns of bx, then add
    // the internal relations of the generating set itself.
    Mat t = solve_z(bx, quot);
    Mat rels = hstack(t, kernel_z(bx));
    auto inv = coker_invariants_z(bx.cols(), rels);
    if (modular) {
        // The quotient has exponent dividing n, so 0 cannot occur; normalize
        // any residual representative by gcd with n.
        for (auto& d : inv) {
            Scalar g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), ring.modulus.get_mpz_t());
            d = g;
        }
        std::sort(inv.begin(), inv.end());
    }
    return inv;
}

namespace {

// Independent Kronecker product for assembling hom/tensor complexes.
Mat kron_o(const Mat& a, const Mat& b) {
    Mat c(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c.set(i * b.rows() + k, j * b.cols() + l,
                          a.at(i, j) * b.at(k, l));
    return c;
}

}  // namespace

std::vector<Scalar> ext_invariants(int n, const fpf::FpModule& m,
                                   const fpf::FpModule& nn) {
    auto d = fpf::detail::resolution_differentials(m, n + 1);
    Mat id_g = Mat::ident(m.ring, nn.gens);
    if (n == 0) {
        // 0 -> Hom(R^g, N) -> Hom(R^r, N): kernel of the first differential.
        Mat q = kron_o(d[0].transposed(), id_g);
        Mat rel3 = kron_o(Mat::ident(m.ring, d[0].cols()), nn.rel);
        Mat p(m.ring, m.gens * nn.gens, 0);
        Mat rel2 = kron_o(Mat::ident(m.ring, m.gens), nn.rel);
        return subquotient_invariants(m.ring, q, rel3, p, rel2);
    }
    const Mat& dq = d[n - 1];
    const Mat& dq1 = d[n];
    Mat q = kron_o(dq1.transposed(), id_g);
    Mat rel3 = kron_o(Mat::ident(m.ring, dq1.cols()), nn.rel);
    Mat p = kron_o(dq.transposed(), id_g);
    Mat rel2 = kron_o(Mat::ident(m.ring, dq.cols()), nn.rel);
    return subquotient_invariants(m.ring, q, rel3, p, rel2);
}

std::vector<Scalar> tor_invariants(int n, const fpf::FpModule& m,
                                   const fpf::FpModule& nn) {
    auto d = fpf::detail::resolution_differentials(m, n + 1);
    Mat id_g = Mat::ident(m.ring, nn.gens);
    const Mat& dq1 = d[n];
    Mat p = kron_o(dq1, id_g);
    Mat rel2 = kron_o(Mat::ident(m.ring, dq1.rows()), nn.rel);
    if (n == 0) {
        // All of N^g modulo the image of the first differential.
        Mat q(m.ring, 0, m.gens * nn.gens);
        Mat rel3(m.ring, 0, 0);
        return subquotient_invariants(m.ring, q, rel3, p, rel2);
    }
    const Mat& dq = d[n - 1];
    Mat q = kron_o(dq, id_g);
    Mat rel3 = kron_o(Mat::ident(m.ring, dq.rows()), nn.rel);
    return subquotient_invariants(m.ring, q, rel3, p, rel2);
}

std::vector<Scalar> stable_hom_invariants(const fpf::FpModule& n,
                                          const fpf::FpModule& m) {
    const RingSpec& ring = m.ring;
    bool modular = ring.kind != RingKind::integers;
    // Generators: matrices h with h*rel_N = rel_M*lambda.
    Mat cond = hstack(kron_o(lift(n.rel.transposed()),
                             Mat::ident(ring_z(), m.gens)),
                      kron_o(Mat::ident(ring_z(), n.rel.cols()), lift(m.rel)));
    if (modular)
        cond = hstack(cond, n_ident(n.rel.cols() * m.gens, ring.modulus));
    Mat sols = take_rows(kernel_z(cond), 0, n.gens * m.gens);

    // Quotient: maps through the free cover of M (matrices g with
    // g*rel_N = 0 over the ring), plus outright trivial maps.
    Mat through_free = kron_o(lift(n.rel.transposed()),
                              Mat::ident(ring_z(), m.gens));
    if (modular)
        through_free =
            hstack(through_free, n_ident(n.rel.cols() * m.gens, ring.modulus));
    Mat covers = take_rows(kernel_z(through_free), 0, n.gens * m.gens);
    Mat trivial = kron_o(Mat::ident(ring_z(), n.gens), lift(m.rel));
    Mat quot = hstack(covers, trivial);
    if (modular) quot = hstack(quot, n_ident(n.gens * m.gens, ring.modulus));

    Mat t = solve_z(sols, quot);
    Mat rels = hstack(t, kernel_z(sols));
    auto inv = coker_invariants_z(sols.cols(), rels);
    if (modular) {
        for (auto& d : inv) {
            Scalar g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), ring.modulus.get_mpz_t());
            d = g;
        }
        std::sort(inv.begin(), inv.end());
    }
    return inv;
}

std::vector<Scalar> sorted_invariants(const fpf::FpModule& m) {
    auto f = fpf::invariant_factors(m).factors;
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace oracle
