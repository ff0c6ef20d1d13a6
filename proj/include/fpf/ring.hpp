#ifndef FPF_RING_HPP
#define FPF_RING_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact linear algebra over the supported base rings: Z, Z/n (n >= 2) and
// GF(p).  Everything downstream (syzygies, Hom/Ext/Tor values, functor
// arithmetic) reduces to the three solvers in this header: Smith normal form,
// linear solving and kernel computation.
//
// Matrices act on column vectors; a module presentation is the column span of
// its relation matrix.  Z/n and GF(p) are handled by lifting to Z, augmenting
// with n*I where a system or kernel is involved, and reducing back; scalars
// are kept as canonical least non-negative residues.

namespace fpf {

using Scalar = mpz_class;

enum class RingKind { integers, integers_mod, prime_field };

// Bookkeeping marker distinguishing R from R^op.  The supported rings are
// commutative, so the marker never changes any arithmetic; it flips only
// through duality/transpose operations and is checked nowhere else.
enum class Side { left, right };

struct RingSpec {
    RingKind kind = RingKind::integers;
    Scalar modulus = 0;  // n for Z/n, p for GF(p), 0 for Z
    Side side = Side::left;

    bool is_modular() const { return kind != RingKind::integers; }
    bool is_field() const { return kind == RingKind::prime_field; }

    // Two rings compose when the arithmetic matches; the side marker is
    // deliberately not part of this test.
    bool same_kind(const RingSpec& o) const {
        return kind == o.kind && modulus == o.modulus;
    }

    RingSpec opposite() const {
        RingSpec r = *this;
        r.side = (side == Side::left) ? Side::right : Side::left;
        return r;
    }

    // Canonical representative of a residue class (identity over Z).
    Scalar canon(const Scalar& x) const;
    bool is_unit(const Scalar& x) const;
    // Inverse of a unit (throws std::invalid_argument otherwise).
    Scalar inverse(const Scalar& x) const;

    std::string to_string() const;
};

RingSpec ring_z(Side side = Side::left);
RingSpec ring_zmod(const Scalar& n, Side side = Side::left);
RingSpec ring_gfp(const Scalar& p, Side side = Side::left);

// Dense matrix over a RingSpec.  Entries are held canonically reduced; all
// arithmetic re-canonicalizes.  Zero-dimensional matrices are first-class.
class Mat {
  public:
    Mat() : ring_(), rows_(0), cols_(0) {}
    Mat(RingSpec ring, int rows, int cols);

    static Mat ident(RingSpec ring, int n);
    static Mat from_rows(RingSpec ring, int rows, int cols,
                         const std::vector<std::vector<long>>& entries);
    static Mat from_cols(RingSpec ring, int rows,
                         const std::vector<std::vector<Scalar>>& cols);
    static Mat col_vector(RingSpec ring, const std::vector<Scalar>& entries);
    static Mat diag(RingSpec ring, const std::vector<Scalar>& d);

    const RingSpec& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const;
    void set(int i, int j, const Scalar& v);

    Mat transposed() const;
    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // The side marker follows the receiver in mixed expressions.
    Mat with_ring(const RingSpec& r) const;

    std::string to_string() const;

  private:
    RingSpec ring_;
    int rows_, cols_;
    std::vector<Scalar> e_;  // row-major

    friend Mat operator*(const Mat&, const Mat&);
    friend Mat operator+(const Mat&, const Mat&);
    friend Mat operator-(const Mat&, const Mat&);
    friend Mat operator-(const Mat&);
    friend Mat operator*(const Scalar&, const Mat&);
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Scalar& c, const Mat& a);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat take_rows(const Mat& a, int from, int count);
Mat take_cols(const Mat& a, int from, int count);

// Column-major vectorization, so that vec(A*X*B) = kron(B^T, A) * vec(X).
Mat vec_of(const Mat& a);
Mat unvec(const Mat& col, RingSpec ring, int rows, int cols);

struct SnfResult {
    Mat s;  // diagonal, d1 | d2 | ... (up to units)
    Mat u;  // invertible, u*a*v = s
    Mat v;  // invertible
};

// Smith normal form.  Over Z the diagonal is non-negative; over GF(p) it is
// reduced to 0/1; over Z/n it is the reduction of the lifted Z form.
SnfResult smith_normal_form(const Mat& a);

// Some X with a*x = b, if one exists.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);

// Columns generate { x : a*x = 0 }.  Over Z this is a lattice basis; over
// modular rings it is a generating set obtained from the lifted system.
Mat kernel_matrix(const Mat& a);

}  // namespace fpf

#endif
