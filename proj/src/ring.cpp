#include "fpf/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace fpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Scalar RingSpec::canon(const Scalar& x) const {
    if (kind == RingKind::integers) return x;
    Scalar r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

bool RingSpec::is_unit(const Scalar& x) const {
    if (kind == RingKind::integers) return x == 1 || x == -1;
    Scalar g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return g == 1;
}

Scalar RingSpec::inverse(const Scalar& x) const {
    if (kind == RingKind::integers) {
        require(x == 1 || x == -1, "inverse: not a unit over Z");
        return x;
    }
    Scalar inv;
    int ok = mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    require(ok != 0, "inverse: not a unit");
    return inv;
}

std::string RingSpec::to_string() const {
    std::string s;
    switch (kind) {
        case RingKind::integers: s = "Z"; break;
        case RingKind::integers_mod: s = "Z/" + modulus.get_str(); break;
        case RingKind::prime_field: s = "GF(" + modulus.get_str() + ")"; break;
    }
    if (side == Side::right) s += "^op";
    return s;
}

RingSpec ring_z(Side side) { return RingSpec{RingKind::integers, 0, side}; }

RingSpec ring_zmod(const Scalar& n, Side side) {
    require(n >= 2, "ring_zmod: modulus must be >= 2");
    return RingSpec{RingKind::integers_mod, n, side};
}

RingSpec ring_gfp(const Scalar& p, Side side) {
    require(p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0,
            "ring_gfp: p must be prime");
    return RingSpec{RingKind::prime_field, p, side};
}

Mat::Mat(RingSpec ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "Mat: negative dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Scalar(0));
}

Mat Mat::ident(RingSpec ring, int n) {
    Mat m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(RingSpec ring, int rows, int cols,
                   const std::vector<std::vector<long>>& entries) {
    require(static_cast<int>(entries.size()) == rows, "from_rows: row count");
    Mat m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(static_cast<int>(entries[i].size()) == cols,
                "from_rows: column count");
        for (int j = 0; j < cols; ++j) m.set(i, j, Scalar(entries[i][j]));
    }
    return m;
}

Mat Mat::from_cols(RingSpec ring, int rows,
                   const std::vector<std::vector<Scalar>>& cols) {
    Mat m(ring, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        require(static_cast<int>(cols[j].size()) == rows,
                "from_cols: column length");
        for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

Mat Mat::col_vector(RingSpec ring, const std::vector<Scalar>& entries) {
    Mat m(ring, static_cast<int>(entries.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.set(i, 0, entries[i]);
    return m;
}

Mat Mat::diag(RingSpec ring, const std::vector<Scalar>& d) {
    int n = static_cast<int>(d.size());
    Mat m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, d[i]);
    return m;
}

const Scalar& Mat::at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
}

void Mat::set(int i, int j, const Scalar& v) {
    e_[static_cast<size_t>(i) * cols_ + j] = ring_.canon(v);
}

Mat Mat::transposed() const {
    Mat t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return ring_.same_kind(o.ring_) && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
}

Mat Mat::with_ring(const RingSpec& r) const {
    Mat m(r, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    return m;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
    }
    os << "] (" << rows_ << "x" << cols_ << " over " << ring_.to_string()
       << ")";
    return os.str();
}

Mat operator*(const Mat& a, const Mat& b) {
    require(a.ring_.same_kind(b.ring_), "Mat*: ring mismatch");
    require(a.cols_ == b.rows_, "Mat*: dimension mismatch");
    Mat c(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                c.e_[static_cast<size_t>(i) * c.cols_ + j] += aik * b.at(k, j);
        }
    for (auto& x : c.e_) x = c.ring_.canon(x);
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    require(a.ring_.same_kind(b.ring_) && a.rows_ == b.rows_ &&
                a.cols_ == b.cols_,
            "Mat+: shape/ring mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.e_.size(); ++i)
        c.e_[i] = c.ring_.canon(c.e_[i] + b.e_[i]);
    return c;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator-(const Mat& a) {
    Mat c = a;
    for (auto& x : c.e_) x = c.ring_.canon(-x);
    return c;
}

Mat operator*(const Scalar& c, const Mat& a) {
    Mat r = a;
    for (auto& x : r.e_) x = r.ring_.canon(c * x);
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    require(a.ring().same_kind(b.ring()) && a.rows() == b.rows(),
            "hstack: mismatch");
    Mat c(a.ring(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.at(i, j));
    }
    return c;
}

Mat vstack(const Mat& a, const Mat& b) {
    require(a.ring().same_kind(b.ring()) && a.cols() == b.cols(),
            "vstack: mismatch");
    Mat c(a.ring(), a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) c.set(i, j, a.at(i, j));
        for (int i = 0; i < b.rows(); ++i) c.set(a.rows() + i, j, b.at(i, j));
    }
    return c;
}

Mat kron(const Mat& a, const Mat& b) {
    require(a.ring().same_kind(b.ring()), "kron: ring mismatch");
    Mat c(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c.set(i * b.rows() + k, j * b.cols() + l,
                          a.at(i, j) * b.at(k, l));
        }
    return c;
}

Mat take_rows(const Mat& a, int from, int count) {
    Mat c(a.ring(), count, a.cols());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(from + i, j));
    return c;
}

Mat take_cols(const Mat& a, int from, int count) {
    Mat c(a.ring(), a.rows(), count);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < count; ++j) c.set(i, j, a.at(i, from + j));
    return c;
}

Mat vec_of(const Mat& a) {
    Mat c(a.ring(), a.rows() * a.cols(), 1);
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            c.set(j * a.rows() + i, 0, a.at(i, j));
    return c;
}

Mat unvec(const Mat& col, RingSpec ring, int rows, int cols) {
    require(col.cols() == 1 && col.rows() == rows * cols, "unvec: shape");
    Mat m(ring, rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m.set(i, j, col.at(j * rows + i, 0));
    return m;
}

namespace {

// In-place integer SNF with accumulated transforms: u*a*v = s.  Pivoting on
// the smallest nonzero entry keeps coefficient growth manageable.
struct SnfWork {
    Mat s, u, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < s.cols(); ++j) {
            Scalar t = s.at(a, j);
            s.set(a, j, s.at(b, j));
            s.set(b, j, t);
        }
        for (int j = 0; j < u.cols(); ++j) {
            Scalar t = u.at(a, j);
            u.set(a, j, u.at(b, j));
            u.set(b, j, t);
        }
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < s.rows(); ++i) {
            Scalar t = s.at(i, a);
            s.set(i, a, s.at(i, b));
            s.set(i, b, t);
        }
        for (int i = 0; i < v.rows(); ++i) {
            Scalar t = v.at(i, a);
            v.set(i, a, v.at(i, b));
            v.set(i, b, t);
        }
    }
    // row[a] += q * row[b]
    void add_row(int a, int b, const Scalar& q) {
        for (int j = 0; j < s.cols(); ++j)
            s.set(a, j, s.at(a, j) + q * s.at(b, j));
        for (int j = 0; j < u.cols(); ++j)
            u.set(a, j, u.at(a, j) + q * u.at(b, j));
    }
    // col[a] += q * col[b]
    void add_col(int a, int b, const Scalar& q) {
        for (int i = 0; i < s.rows(); ++i)
            s.set(i, a, s.at(i, a) + q * s.at(i, b));
        for (int i = 0; i < v.rows(); ++i)
            v.set(i, a, v.at(i, a) + q * v.at(i, b));
    }
    void negate_row(int a) {
        for (int j = 0; j < s.cols(); ++j) s.set(a, j, -s.at(a, j));
        for (int j = 0; j < u.cols(); ++j) u.set(a, j, -u.at(a, j));
    }
    void scale_row(int a, const Scalar& c) {
        for (int j = 0; j < s.cols(); ++j) s.set(a, j, c * s.at(a, j));
        for (int j = 0; j < u.cols(); ++j) u.set(a, j, c * u.at(a, j));
    }
};

SnfResult snf_over_z(const Mat& a) {
    RingSpec z = ring_z();
    SnfWork w{a.with_ring(z), Mat::ident(z, a.rows()), Mat::ident(z, a.cols())};
    const int m = a.rows(), n = a.cols();
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing submatrix.
            int pi = -1, pj = -1;
            Scalar best;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Scalar& x = w.s.at(i, j);
                    if (x == 0) continue;
                    Scalar ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = steps;  // trailing block is zero; done
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (w.s.at(i, t) == 0) continue;
                Scalar q;
                mpz_fdiv_q(q.get_mpz_t(), w.s.at(i, t).get_mpz_t(),
                           w.s.at(t, t).get_mpz_t());
                if (q != 0) w.add_row(i, t, -q);
                if (w.s.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (w.s.at(t, j) == 0) continue;
                Scalar q;
                mpz_fdiv_q(q.get_mpz_t(), w.s.at(t, j).get_mpz_t(),
                           w.s.at(t, t).get_mpz_t());
                if (q != 0) w.add_col(j, t, -q);
                if (w.s.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the rest of the submatrix for the chain
            // d1 | d2 | ... to come out of the later steps.
            bool divides_all = true;
            for (int i = t + 1; i < m && divides_all; ++i)
                for (int j = t + 1; j < n; ++j) {
                    if (w.s.at(i, j) % w.s.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            if (divides_all) break;
        }
        if (t >= steps) break;
    }

    for (int t = 0; t < steps; ++t)
        if (w.s.at(t, t) < 0) w.negate_row(t);
    return SnfResult{w.s, w.u, w.v};
}

}  // namespace

SnfResult smith_normal_form(const Mat& a) {
    SnfResult r = snf_over_z(a);
    const RingSpec& ring = a.ring();
    if (!ring.is_modular())
        return SnfResult{r.s.with_ring(ring), r.u.with_ring(ring),
                         r.v.with_ring(ring)};
    Mat s = r.s.with_ring(ring);
    Mat u = r.u.with_ring(ring);
    Mat v = r.v.with_ring(ring);
    if (ring.is_field()) {
        // Scale diagonal units down to 1.
        for (int t = 0; t < std::min(s.rows(), s.cols()); ++t) {
            const Scalar& d = s.at(t, t);
            if (d == 0 || d == 1) continue;
            Scalar inv = ring.inverse(d);
            for (int j = 0; j < s.cols(); ++j) s.set(t, j, inv * s.at(t, j));
            for (int j = 0; j < u.cols(); ++j) u.set(t, j, inv * u.at(t, j));
        }
    }
    return SnfResult{s, u, v};
}

namespace {

// Solve a*x = b over Z via the Smith form of a.
std::optional<Mat> solve_over_z(const Mat& a, const Mat& b) {
    SnfResult f = snf_over_z(a);
    Mat c = f.u * b;
    const int n = a.cols(), m = a.rows();
    const int diag = std::min(m, n);
    Mat y(ring_z(), n, b.cols());
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            if (i < diag && f.s.at(i, i) != 0) {
                Scalar q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                            c.at(i, j).get_mpz_t(),
                            f.s.at(i, i).get_mpz_t());
                if (r != 0) return std::nullopt;
                y.set(i, j, q);
            } else if (c.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return f.v * y;
}

// Lift a modular matrix to Z together with n*I columns so that solving and
// kernel computation happen in the lifted lattice.
Mat lift_augmented(const Mat& a) {
    RingSpec z = ring_z();
    Mat az = a.with_ring(z);
    Mat ni = Mat::ident(z, a.rows());
    for (int i = 0; i < a.rows(); ++i) ni.set(i, i, a.ring().modulus);
    return hstack(az, ni);
}

}  // namespace

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
    if (!a.ring().same_kind(b.ring()))
        throw std::invalid_argument("solve_linear: ring mismatch");
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_linear: row mismatch");
    if (!a.ring().is_modular()) return solve_over_z(a, b);
    auto sol = solve_over_z(lift_augmented(a), b.with_ring(ring_z()));
    if (!sol) return std::nullopt;
    return take_rows(*sol, 0, a.cols()).with_ring(a.ring());
}

Mat kernel_matrix(const Mat& a) {
    if (!a.ring().is_modular()) {
        SnfResult f = snf_over_z(a);
        const int diag = std::min(a.rows(), a.cols());
        std::vector<int> keep;
        for (int j = 0; j < a.cols(); ++j)
            if (j >= diag || f.s.at(j, j) == 0) keep.push_back(j);
        Mat k(a.ring(), a.cols(), static_cast<int>(keep.size()));
        for (int c = 0; c < static_cast<int>(keep.size()); ++c)
            for (int i = 0; i < a.cols(); ++i)
                k.set(i, c, f.v.at(i, keep[c]));
        return k;
    }
    Mat kz = kernel_matrix(lift_augmented(a));
    Mat top = take_rows(kz, 0, a.cols()).with_ring(a.ring());
    // Drop columns that reduce to zero mod n.
    std::vector<int> keep;
    for (int j = 0; j < top.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < top.rows() && zero; ++i)
            if (top.at(i, j) != 0) zero = false;
        if (!zero) keep.push_back(j);
    }
    Mat k(a.ring(), a.cols(), static_cast<int>(keep.size()));
    for (int c = 0; c < static_cast<int>(keep.size()); ++c)
        for (int i = 0; i < a.cols(); ++i) k.set(i, c, top.at(i, keep[c]));
    return k;
}

}  // namespace fpf
