#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "filtration.hpp"

namespace hodgemc {

// Itemized pass/fail report shared by all checkers.
struct Report {
    struct Item {
        std::string name;
        bool pass = true;
        std::string witness;
    };
    std::vector<Item> items;

    bool pass() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& witness = "") {
        items.push_back({name, ok, witness});
    }
};

// Mixed Hodge structure on a rational vector space of dimension `dim`:
// W increasing with real (rational) levels, F decreasing on the
// complexification in the same coordinates.
struct Mhs {
    int dim = 0;
    IncFiltration W;
    DecFiltration F;

    friend bool operator==(const Mhs& a, const Mhs& b) {
        return a.dim == b.dim && a.W == b.W && a.F == b.F;
    }
};

struct Bigrading {
    int dim = 0;
    std::map<std::pair<int, int>, Subspace> comps;  // only nonzero components

    friend bool operator==(const Bigrading& a, const Bigrading& b) {
        return a.dim == b.dim && a.comps == b.comps;
    }
};

struct PolarizationForm {
    Mat S;  // real entries, (-1)^n symmetric for weight n
};

// F^p ⊕ conj(F^{n+1-p}) = C^dim for every p in range. Conjugation is
// entrywise (the standard coordinates carry the real structure).
Report check_hodge_structure(int dim, int weight, const DecFiltration& F);

// Every W-graded piece, with the F-induced filtration in canonical quotient
// coordinates, is a Hodge structure of the matching weight.
Report check_mhs(const Mhs& m);

// Canonical bigrading I^{p,q} = R^{p,q} ∩ L^{p,q}. Verifies the
// reconstruction identities and the conjugation symmetry modulo lower total
// weight before returning; throws invariant_error if they fail.
Bigrading deligne_bigrading(const Mhs& m);

// Splitness test: conj(I^{p,q}) == I^{q,p} exactly.
bool is_r_split(const Bigrading& b);

// Rebuilds (W, F) from a bigrading. Validates direct sum, conjugation
// symmetry mod lower weight, and rationality of the W levels; throws
// input_error with a witness component on failure.
Mhs mhs_from_bigrading(const Bigrading& b);

enum class DerivedKind { Tensor, Hom, Dual };

// Tensor / Hom / dual of MHS under the standard induced filtrations.
// For Dual only m1 is used.
Mhs derived_mhs(DerivedKind kind, const Mhs& m1, const Mhs& m2);

struct MorphismVerdict {
    bool is_morphism = false;
    bool strict = false;
    bool preserves_bigrading = false;
    std::string detail;
};

// f is a rational matrix (dim2 x dim1) acting on column vectors. When f is
// W- and F-compatible it must also be strict and bigrading-preserving; a
// violation of that consequence raises invariant_error.
MorphismVerdict check_morphism(const Mat& f, const Mhs& m1, const Mhs& m2);

// Polarization check for a pure weight-n Hodge structure: symmetry of S,
// orthogonality of the bigrading under the sesquilinear extension, and
// positive-definiteness of h(u,v) = S(Cu, conj v) via leading principal
// minors, all exact.
Report check_polarization(int dim, int weight, const DecFiltration& F, const PolarizationForm& S);

}  // namespace hodgemc
