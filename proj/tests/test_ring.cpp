#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpf/ring.hpp"
#include "oracle.hpp"

using namespace fpf;

namespace {

Mat random_mat(RingSpec ring, std::mt19937_64& rng, int max_dim, int bound) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::uniform_int_distribution<int> ent(-bound, bound);
    int r = dim(rng), c = dim(rng);
    Mat m(ring, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, Scalar(ent(rng)));
    return m;
}

bool diag_unit(const RingSpec& ring, const Mat& u) {
    SnfResult f = smith_normal_form(u);
    for (int i = 0; i < u.rows(); ++i)
        if (!ring.is_unit(f.s.at(i, i))) return false;
    return true;
}

void check_snf_contract(const RingSpec& ring, const Mat& a) {
    SnfResult f = smith_normal_form(a);
    CHECK(f.u * a * f.v == f.s);
    CHECK(diag_unit(ring, f.u));
    CHECK(diag_unit(ring, f.v));
    int diag = std::min(a.rows(), a.cols());
    for (int i = 0; i + 1 < diag; ++i) {
        const Scalar& d1 = f.s.at(i, i);
        const Scalar& d2 = f.s.at(i + 1, i + 1);
        if (d1 == 0) {
            CHECK(d2 == 0);
        } else if (!ring.is_modular()) {
            CHECK(d2 % d1 == 0);
        } else {
            // Divisibility up to units: d2 is a multiple of d1 modulo n.
            Mat lhs(ring, 1, 1), rhs(ring, 1, 1);
            lhs.set(0, 0, d1);
            rhs.set(0, 0, d2);
            CHECK(solve_linear(lhs, rhs).has_value());
        }
    }
    for (int i = 0; i < diag; ++i)
        for (int j = 0; j < diag; ++j)
            if (i != j) CHECK(f.s.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form examples") {
    RingSpec z = ring_z();
    Mat a = Mat::from_rows(z, 2, 2, {{2, 4}, {6, 8}});
    SnfResult f = smith_normal_form(a);
    CHECK(f.s.at(0, 0) == 2);
    CHECK(f.s.at(1, 1) == 4);
    CHECK(f.u * a * f.v == f.s);

    Mat id3 = Mat::ident(z, 3);
    SnfResult fi = smith_normal_form(id3);
    CHECK(fi.s == id3);

    Mat zero = Mat::from_rows(z, 1, 1, {{0}});
    CHECK(smith_normal_form(zero).s == zero);
}

TEST_CASE("smith normal form randomized contract") {
    std::vector<RingSpec> rings = {ring_z(), ring_zmod(8), ring_zmod(12),
                                   ring_gfp(5)};
    for (const auto& ring : rings) {
        std::mt19937_64 rng(20240901);
        for (int trial = 0; trial < 200; ++trial)
            check_snf_contract(ring, random_mat(ring, rng, 5, 9));
    }
}

TEST_CASE("solve_linear examples") {
    RingSpec z = ring_z();
    Mat a = Mat::from_rows(z, 1, 1, {{2}});
    Mat b4 = Mat::from_rows(z, 1, 1, {{4}});
    auto x = solve_linear(a, b4);
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == 2);

    Mat b3 = Mat::from_rows(z, 1, 1, {{3}});
    CHECK_FALSE(solve_linear(a, b3).has_value());

    RingSpec z8 = ring_zmod(8);
    Mat a8 = Mat::from_rows(z8, 1, 1, {{2}});
    Mat b8 = Mat::from_rows(z8, 1, 1, {{6}});
    auto x8 = solve_linear(a8, b8);
    REQUIRE(x8.has_value());
    CHECK(a8 * *x8 == b8);
}

TEST_CASE("solve_linear randomized: solutions exact, failures obstructed") {
    for (const auto& ring : {ring_z(), ring_zmod(8), ring_gfp(3)}) {
        std::mt19937_64 rng(77);
        int solved = 0, failed = 0;
        for (int trial = 0; trial < 200; ++trial) {
            Mat a = random_mat(ring, rng, 4, 9);
            Mat b = random_mat(ring, rng, 4, 9);
            if (b.rows() != a.rows() || b.cols() == 0) continue;
            auto x = solve_linear(a, b);
            if (x.has_value()) {
                ++solved;
                CHECK(a * *x == b);
            } else {
                ++failed;
                // The reduced system must carry a genuine residue
                // obstruction in some row.
                Mat az = a, bz = b;
                if (ring.is_modular()) {
                    Mat ni = Mat::ident(ring_z(), a.rows());
                    for (int i = 0; i < a.rows(); ++i)
                        ni.set(i, i, ring.modulus);
                    az = hstack(a.with_ring(ring_z()), ni);
                    bz = b.with_ring(ring_z());
                }
                SnfResult f = smith_normal_form(az);
                Mat c = f.u * bz;
                int diag = std::min(az.rows(), az.cols());
                bool obstructed = false;
                for (int i = 0; i < az.rows() && !obstructed; ++i)
                    for (int j = 0; j < c.cols() && !obstructed; ++j) {
                        if (i < diag && f.s.at(i, i) != 0) {
                            if (c.at(i, j) % f.s.at(i, i) != 0)
                                obstructed = true;
                        } else if (c.at(i, j) != 0) {
                            obstructed = true;
                        }
                    }
                CHECK(obstructed);
            }
        }
        CHECK(solved > 0);
    }
}

TEST_CASE("kernel_matrix examples") {
    RingSpec z = ring_z();
    Mat a = Mat::from_rows(z, 1, 2, {{2, 3}});
    Mat k = kernel_matrix(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == 1);
    // (3, -2) generates; both it and its negation are acceptable columns.
    Mat target = Mat::from_rows(z, 2, 1, {{3}, {-2}});
    CHECK(solve_linear(k, target).has_value());

    RingSpec z8 = ring_zmod(8);
    Mat a8 = Mat::from_rows(z8, 1, 1, {{2}});
    Mat k8 = kernel_matrix(a8);
    CHECK((a8 * k8).is_zero());
    Mat four = Mat::from_rows(z8, 1, 1, {{4}});
    CHECK(solve_linear(k8, four).has_value());

    CHECK(kernel_matrix(Mat::ident(z, 3)).cols() == 0);
}

TEST_CASE("kernel_matrix randomized against oracle kernel") {
    for (const auto& ring : {ring_z(), ring_zmod(8), ring_gfp(5)}) {
        std::mt19937_64 rng(123);
        for (int trial = 0; trial < 120; ++trial) {
            Mat a = random_mat(ring, rng, 4, 9);
            Mat k = kernel_matrix(a);
            CHECK((a * k).is_zero());
            // Independent kernel generators must be expressible in k.
            Mat az = a.with_ring(ring_z());
            if (ring.is_modular()) {
                Mat ni = Mat::ident(ring_z(), a.rows());
                for (int i = 0; i < a.rows(); ++i) ni.set(i, i, ring.modulus);
                az = hstack(az, ni);
            }
            Mat ko = take_rows(oracle::kernel_z(az), 0, a.cols())
                         .with_ring(ring);
            if (ko.cols() > 0) CHECK(solve_linear(k, ko).has_value());
        }
    }
}

TEST_CASE("oracle snf agrees with library snf diagonals") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        Mat a = random_mat(ring_z(), rng, 5, 9);
        SnfResult f = smith_normal_form(a);
        oracle::SnfZ g = oracle::snf_z(a);
        CHECK(g.u * a * g.v == g.s);
        int diag = std::min(a.rows(), a.cols());
        for (int i = 0; i < diag; ++i) CHECK(f.s.at(i, i) == g.s.at(i, i));
    }
}

TEST_CASE("ring scalar canonicalization") {
    RingSpec z8 = ring_zmod(8);
    CHECK(z8.canon(Scalar(-3)) == 5);
    CHECK(z8.canon(Scalar(17)) == 1);
    CHECK(z8.is_unit(Scalar(3)));
    CHECK_FALSE(z8.is_unit(Scalar(2)));
    CHECK(z8.inverse(Scalar(3)) == 3);
    CHECK_THROWS_AS(ring_zmod(1), std::invalid_argument);
    CHECK_THROWS_AS(ring_gfp(6), std::invalid_argument);
}
