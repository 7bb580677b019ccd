#pragma once

#include "dga.hpp"
#include "mhs.hpp"

namespace hodgemc {

// Mixed Hodge diagram: a filtered rational DGA A, a bifiltered Q(i)-DGA B
// (F from bidegrees), and a W-compatible comparison morphism
// iota : A ⊗ Q(i) -> B. The complexified copy of A is owned here so iota's
// source pointer stays valid.
struct MixedHodgeDiagram {
    Dga A;
    Dga B;
    Dga A_c;  // complexify(A)
    std::vector<Mat> iota_maps;  // per degree, dim B^p x dim A^p

    DgaMorphism iota() const {
        DgaMorphism f;
        f.source = &A_c;
        f.target = &B;
        f.maps = iota_maps;
        return f;
    }
    void refresh() { A_c = complexify(A); }
};

// One cell of a spectral-sequence page for the decreasing filtration
// W^p = W_{-p}: carriers of E_r^{p,q} in canonical coordinates, with the
// data needed to lift classes back to the complex.
struct SpectralCell {
    int p = 0, q = 0;
    int dim = 0;
    std::vector<Vec> reps;  // representatives in A^{p+q}
    std::optional<DecFiltration> F;  // induced by bidegrees when present
};

struct SpectralPage {
    int r = 0;  // 0 or 1
    std::map<std::pair<int, int>, SpectralCell> cells;

    const SpectralCell* cell(int p, int q) const {
        auto it = cells.find({p, q});
        return it == cells.end() ? nullptr : &it->second;
    }
};

// E_0^{p,q} = Gr_{W_{-p}}(A^{p+q}) and E_1 = H(E_0, d_0), with canonical
// representatives and the F-induced filtration on each cell when the
// instance carries bidegrees.
SpectralPage w_spectral_page(const Dga& a, int r);

// Class coordinates of a representative inside a page cell (r = 0 or 1).
// Used by the axiom checks; throws input_error when v is not a valid
// representative for the cell.
Vec page_class_of(const Dga& a, const SpectralPage& page, int p, int q, const Vec& v);

// The three diagram axioms, itemized per cell:
//  1. iota induces isomorphisms on every E_1 cell;
//  2. d_0 on E_0(B) is strictly compatible with the F-induced filtration;
//  3. the F-induced filtration on E_1^{p,q}(B) is a Hodge structure of
//     weight q (checked through the real structure transported by iota
//     wherever iota* is bijective).
Report check_mhd(const MixedHodgeDiagram& m);

// MHS on H^r(A): weight filtration from the shifted filtration W', Hodge
// filtration transported from H^r(B) through iota*. Requires check_mhd.
Mhs induced_mhs_on_cohomology(const MixedHodgeDiagram& m, int r);

}  // namespace hodgemc
