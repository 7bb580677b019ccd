#include "doctest.h"

#include "errors.hpp"
#include "linalg.hpp"
#include "support/rng.hpp"

using namespace hodgemc;
using hodgemc::testing::make_rng;
using hodgemc::testing::rand_gaussian;
using hodgemc::testing::rand_int;

namespace {

Vec V(std::initializer_list<Scalar> xs) { return Vec(xs); }
Scalar I() { return Scalar::imaginary_unit(); }

Subspace random_subspace(std::mt19937_64& rng, int ambient, int gens) {
    std::vector<Vec> rows;
    for (int r = 0; r < gens; ++r) {
        Vec v(ambient);
        for (auto& x : v) x = rand_gaussian(rng, 2);
        rows.push_back(v);
    }
    return Subspace::span(ambient, rows);
}

}  // namespace

TEST_CASE("scalar field arithmetic") {
    Scalar a = Scalar::of(1, 2) + I() * Scalar::of(3, 4);
    Scalar b = Scalar::of(-2, 5) + I() * Scalar::of(1, 3);
    CHECK(a * b / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK_THROWS_AS(Scalar::zero().inv(), input_error);
    CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
}

TEST_CASE("solve: identity and inconsistent systems") {
    Mat id = Mat::identity(2);
    auto x = solve(id, V({Scalar(3), Scalar(5)}));
    REQUIRE(x.has_value());
    CHECK(*x == V({Scalar(3), Scalar(5)}));

    Mat z(1, 1);
    CHECK(!solve(z, V({Scalar(1)})).has_value());
}

TEST_CASE("solve over Q(i) picks free variables zero") {
    // [1 i] x = (i)  ->  (i, 0) under the canonical pivot order
    Mat m(1, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = I();
    auto x = solve(m, V({I()}));
    REQUIRE(x.has_value());
    CHECK(*x == V({I(), Scalar(0)}));
}

TEST_CASE("subspace canonical ops") {
    Subspace e1 = Subspace::span(2, {V({Scalar(1), Scalar(0)})});
    Subspace e2 = Subspace::span(2, {V({Scalar(0), Scalar(1)})});
    CHECK(e1.intersect(e2).is_zero());
    CHECK(e1.sum(e2).is_full());

    Subspace line = Subspace::span(2, {V({Scalar(1), I()})});
    Subspace cline = Subspace::span(2, {V({Scalar(1), -I()})});
    CHECK(line.conj() == cline);

    // preimage of <e1> under (x,y) -> x+y is all of Q^2... projection to Q^1
    Mat sum_map(1, 2);
    sum_map.at(0, 0) = Scalar(1);
    sum_map.at(0, 1) = Scalar(1);
    Subspace target = Subspace::full(1);
    CHECK(target.preimage(sum_map).is_full());
}

TEST_CASE("quotient basis completes the subspace") {
    Subspace s = Subspace::span(3, {V({Scalar(1), Scalar(2), Scalar(0)})});
    auto reps = quotient_basis(s);
    REQUIRE(reps.size() == 2);
    Subspace total = s;
    for (auto& r : reps) total = total.sum(Subspace::span(3, {r}));
    CHECK(total.is_full());
}

TEST_CASE("dimension formula and containment on random subspaces") {
    auto rng = make_rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rand_int(rng, 1, 5);
        Subspace s = random_subspace(rng, n, rand_int(rng, 0, n));
        Subspace t = random_subspace(rng, n, rand_int(rng, 0, n));
        Subspace su = s.sum(t);
        Subspace in = s.intersect(t);
        CHECK(su.contains(s));
        CHECK(su.contains(t));
        CHECK(s.contains(in));
        CHECK(t.contains(in));
        CHECK(su.dim() + in.dim() == s.dim() + t.dim());
        CHECK(s.conj().conj() == s);
    }
}

TEST_CASE("kernel and image are complementary in rank") {
    auto rng = make_rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        int r = rand_int(rng, 1, 4), c = rand_int(rng, 1, 4);
        Mat m(r, c);
        for (auto& x : m.a) x = rand_gaussian(rng, 2);
        Mat ker = kernel(m);
        for (int k = 0; k < ker.rows; ++k) CHECK(vec_is_zero(m.apply(ker.row(k))));
        CHECK(ker.rows + rank_of(m) == c);
    }
}
