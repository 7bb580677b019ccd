#pragma once

#include <map>

#include "linalg.hpp"

namespace hodgemc {

// Increasing filtration W_* on Q(i)^n: W_{lo-1} = 0, W_hi = full, W_i nested.
struct IncFiltration {
    int ambient = 0;
    int lo = 0;  // smallest index with W_lo possibly nonzero
    int hi = 0;  // smallest index with W_hi = full
    std::map<int, Subspace> levels;  // materialized on [lo, hi]

    IncFiltration() = default;
    static IncFiltration trivial(int n, int level = 0);
    static IncFiltration from_levels(int n, const std::map<int, Subspace>& given);

    Subspace at(int i) const;
    void validate() const;  // nested + exhaustive + bounded below

    // Smallest i with v in W_i; requires v != 0.
    int weight_of(const Vec& v) const;

    bool is_real() const;
    friend bool operator==(const IncFiltration& a, const IncFiltration& b);
};

// Decreasing filtration F^* on Q(i)^n: F^lo = full, F^{hi+1} = 0.
struct DecFiltration {
    int ambient = 0;
    int lo = 0;  // largest index with F^lo = full
    int hi = 0;  // largest index with F^hi possibly nonzero
    std::map<int, Subspace> levels;  // materialized on [lo, hi]

    DecFiltration() = default;
    static DecFiltration trivial(int n, int level = 0);
    static DecFiltration from_levels(int n, const std::map<int, Subspace>& given);

    Subspace at(int p) const;
    void validate() const;

    friend bool operator==(const DecFiltration& a, const DecFiltration& b);
};

// Induced filtrations. Conventions:
//   subspace:  level_i = filt_i ∩ S, in S-coordinates when a quotient-free
//              chart is wanted (see restrict_inc).
//   quotient:  image of filt_i.
//   dual:      W_k(V*) = {λ : λ(W_{-k-1}(V)) = 0};  F^p(V*) = ann F^{1-p}(V).
//   tensor:    W_k = Σ_{i+j=k} W_i ⊗ W_j, same shape for F.
//   hom:       W_k(Hom(V1,V2)) = {f : f(W_i(V1)) ⊆ W_{i+k}(V2) for all i}.
// Hom(V1,V2) is vectorized row-major: entry (r,c) of the matrix at index
// r*dim(V1)+c; tensor V1⊗V2 at index i1*dim(V2)+i2.

IncFiltration restrict_inc(const IncFiltration& f, const Subspace& s, bool in_s_coords);
IncFiltration quotient_inc(const IncFiltration& f, const Quotient& q);
DecFiltration restrict_dec(const DecFiltration& f, const Subspace& s, bool in_s_coords);
DecFiltration quotient_dec(const DecFiltration& f, const Quotient& q);

IncFiltration dual_inc(const IncFiltration& f);
DecFiltration dual_dec(const DecFiltration& f);

IncFiltration tensor_inc(const IncFiltration& f1, const IncFiltration& f2);
DecFiltration tensor_dec(const DecFiltration& f1, const DecFiltration& f2);

IncFiltration hom_inc(const IncFiltration& f1, const IncFiltration& f2);
DecFiltration hom_dec(const DecFiltration& f1, const DecFiltration& f2);

// Subspace of Hom(V1,V2) (row-major vectorization) of maps sending src into dst.
Subspace hom_transporter(const Subspace& src, const Subspace& dst, int n1, int n2);

Vec flatten_hom(const Mat& m);         // row-major vectorization
Mat unflatten_hom(const Vec& v, int rows, int cols);
Vec tensor_vec(const Vec& a, const Vec& b);

}  // namespace hodgemc
