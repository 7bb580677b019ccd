#include "doctest.h"

#include "errors.hpp"
#include "filtration.hpp"
#include "support/rng.hpp"

using namespace hodgemc;
using hodgemc::testing::make_rng;
using hodgemc::testing::rand_int;

namespace {

Vec ei(int n, int i) {
    Vec v(n);
    v[i] = Scalar::one();
    return v;
}

// W_0 = <e0>, W_2 = Q^2 (jump at 0 and 2).
IncFiltration two_step() {
    std::map<int, Subspace> lv;
    lv[0] = Subspace::span(2, {ei(2, 0)});
    lv[1] = lv[0];
    lv[2] = Subspace::full(2);
    return IncFiltration::from_levels(2, lv);
}

}  // namespace

TEST_CASE("filtration validation") {
    std::map<int, Subspace> bad;
    bad[0] = Subspace::full(2);
    bad[1] = Subspace::span(2, {ei(2, 0)});
    CHECK_THROWS_AS(IncFiltration::from_levels(2, bad), input_error);
    CHECK_NOTHROW(two_step().validate());
    CHECK(two_step().weight_of(ei(2, 0)) == 0);
    CHECK(two_step().weight_of(ei(2, 1)) == 2);
}

TEST_CASE("induced filtration on a single-jump source stays single-jump") {
    IncFiltration triv = IncFiltration::trivial(2, 0);
    IncFiltration d = dual_inc(triv);
    CHECK(d.at(0).is_full());
    CHECK(d.at(-1).is_zero());
    IncFiltration t = tensor_inc(triv, triv);
    CHECK(t.at(0).is_full());
    CHECK(t.at(-1).is_zero());
}

TEST_CASE("hom filtration: W_{-1}(End) of the two-step space") {
    IncFiltration w = two_step();
    IncFiltration h = hom_inc(w, w);
    // Maps lowering weight: f(e1) in <e0>, f(e0) = 0 -> the single matrix
    // unit E_{01} (row-major index 0*2+1).
    Subspace lvl = h.at(-1);
    CHECK(lvl.dim() == 1);
    Vec expect(4);
    expect[1] = Scalar::one();
    CHECK(lvl.contains(expect));
    // E_{01} lowers weight by two, so it already sits in W_{-2}(End).
    CHECK(h.at(-2) == lvl);
    CHECK(h.at(-3).is_zero());
    CHECK(h.at(0).dim() == 3);
}

TEST_CASE("dual filtration convention") {
    IncFiltration w = two_step();
    IncFiltration d = dual_inc(w);
    // W_{-2}(V*) = ann(W_1) = ann(<e0>) = <e1*>; e0* sits at weight 0.
    CHECK(d.at(-2).dim() == 1);
    CHECK(d.at(-2).contains(ei(2, 1)));
    CHECK(d.at(-3).is_zero());
    CHECK(d.at(-1) == d.at(-2));
    CHECK(d.at(0).is_full());
}

TEST_CASE("hom filtration respects evaluation levels") {
    auto rng = make_rng(21);
    IncFiltration w1 = two_step();
    std::map<int, Subspace> lv;
    lv[-1] = Subspace::span(3, {ei(3, 0)});
    lv[0] = Subspace::span(3, {ei(3, 0), ei(3, 1)});
    lv[1] = Subspace::full(3);
    IncFiltration w2 = IncFiltration::from_levels(3, lv);
    IncFiltration h = hom_inc(w1, w2);
    for (int k = h.lo; k <= h.hi; ++k) {
        Subspace lvl = h.at(k);
        for (int r = 0; r < lvl.basis.rows; ++r) {
            Mat f = unflatten_hom(lvl.basis.row(r), 3, 2);
            for (int i = w1.lo; i <= w1.hi; ++i) {
                Subspace img = w1.at(i).image(f);
                CHECK(w2.at(i + k).contains(img));
            }
        }
    }
    (void)rng;
}
