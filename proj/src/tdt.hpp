#pragma once

#include <map>

#include "dga.hpp"

namespace hodgemc {

// Element of A ⊗ (t,dt) of pure total degree n, stored as
//   sum_i a_i t^i + sum_i b_i t^i dt,   a_i in A^n, b_i in A^{n-1}.
// d(x t^i) = dx t^i + (-1)^{|x|} i x t^{i-1} dt with dt written rightmost.
struct TdtElement {
    const Dga* dga = nullptr;
    int degree = 0;
    std::map<int, Vec> a;  // t-power -> coefficient in A^degree
    std::map<int, Vec> b;  // t-power -> coefficient in A^{degree-1}

    static TdtElement constant(const Dga& dga, int degree, const Vec& value);
    static TdtElement zero(const Dga& dga, int degree) { return constant(dga, degree, vec_zero(dga.dim(degree))); }

    bool is_zero() const;
    void trim();  // drop zero coefficients

    Vec eval0() const;  // t = 0, dt = 0
    Vec eval1() const;  // t = 1, dt = 0
    Vec integrate01() const;         // (-1)^{n-1} sum b_i/(i+1) in A^{n-1}
    TdtElement integrate0t() const;  // (-1)^{n-1} sum b_i t^{i+1}/(i+1), degree n-1

    TdtElement d() const;
    TdtElement wedge(const TdtElement& other) const;

    TdtElement operator+(const TdtElement& o) const;
    TdtElement operator-(const TdtElement& o) const;
    TdtElement scaled(const Scalar& c) const;

    friend bool operator==(const TdtElement& x, const TdtElement& y);
};

// Homotopy between DGA morphisms: a morphism into target ⊗ (t,dt), given by
// the TdtElement image of each source basis element per degree.
struct Homotopy {
    const Dga* source = nullptr;
    const Dga* target = nullptr;
    std::vector<std::vector<TdtElement>> values;  // [deg][basis index]

    TdtElement apply(int p, const Vec& x) const;
    DgaMorphism eval0() const;
    DgaMorphism eval1() const;
};

// True iff H is a DGA morphism into target ⊗ (t,dt) with the stated
// endpoints; checks W-compatibility level-wise when both sides are filtered.
Report check_homotopy(const Homotopy& H, const DgaMorphism& phi0, const DgaMorphism& phi1);

}  // namespace hodgemc
