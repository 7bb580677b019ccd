#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filtration.hpp"
#include "mhs.hpp"

namespace hodgemc {

// Degree-truncated graded-commutative DGA with explicit basis and structure
// constants. Degree 0 carries the unit at index 0. Products that would land
// above max_degree are truncated to zero.
struct Dga {
    int max_degree = 3;
    bool complex_field = false;  // false: coefficients must stay rational
    std::vector<std::vector<std::string>> basis;  // [deg][idx] labels
    // mult[p][q]: dim(p+q) x (dim(p)*dim(q)) matrix; column i*dim(q)+j is
    // basis_i^p ∧ basis_j^q. Present for p+q <= max_degree.
    std::vector<std::vector<Mat>> mult;
    std::vector<Mat> d;  // d[p]: dim(p+1) x dim(p); d[max_degree] has 0 rows
    std::optional<std::vector<IncFiltration>> W;                       // per degree
    std::optional<std::vector<std::vector<std::pair<int, int>>>> bidegrees;  // per degree, per element
    std::optional<std::vector<Mat>> dc;  // second differential, shaped like d

    int dim(int p) const {
        return (p < 0 || p > max_degree) ? 0 : static_cast<int>(basis[p].size());
    }
    Vec zero_elt(int p) const { return vec_zero(dim(p)); }
    Vec unit() const;

    Vec wedge(int p, const Vec& x, int q, const Vec& y) const;
    Vec diff(int p, const Vec& x) const;
    Vec dc_diff(int p, const Vec& x) const;

    bool has_W() const { return W.has_value(); }
    Subspace W_at(int deg, int i) const;  // trivial filtration when W absent

    bool has_bidegrees() const { return bidegrees.has_value(); }
    DecFiltration F_at(int deg) const;       // from bidegrees
    Subspace F_level(int deg, int p) const;  // span of basis elements with P >= p

    // Bidegree components of d; requires bidegrees. del = (1,0) part,
    // delbar = (0,1) part. validate() checks d = del + delbar.
    Mat del(int p) const;
    Mat delbar(int p) const;

    int index_of(int deg, const std::string& label) const;  // -1 if absent
};

// Build a free graded-commutative DGA on degree-1 generators, truncated at
// max_degree. d maps generators into the degree-2 monomial span; weights and
// bidegrees, when given, extend additively to monomials (unit at weight 0 /
// bidegree (0,0)). dc, when given on generators, extends as a derivation.
struct FreeGenerator {
    std::string name;
    int weight = 1;
    std::optional<std::pair<int, int>> bidegree;
};

Dga make_free_dga(const std::vector<FreeGenerator>& gens,
                  const std::vector<Vec>& d_of_gens,  // each over the deg-2 monomial basis
                  int max_degree = 3, bool complex_field = false, bool with_weights = false);

// Monomial index helpers for free DGAs (2- and 3-fold products, i<j<k).
int pair_index(int n, int i, int j);
int triple_index(int n, int i, int j, int k);

// Structural validation: graded commutativity, d∘d = 0, Leibniz,
// associativity, unit, filtration compatibility, dc laws, cohomological
// connectedness.
Report validate_dga(const Dga& a);

struct CohomologyData {
    int degree = 0;
    int dim = 0;
    Subspace cocycles;      // ker d in the degree
    Subspace coboundaries;  // im d from one degree below
    std::vector<Vec> reps;  // canonical representatives, one per class
    // class coordinates of a cocycle (throws input_error on non-cocycles)
    Vec class_of(const Vec& v) const;

    // internal chart
    Quotient quot{Subspace(0)};
};

CohomologyData cohomology(const Dga& a, int n);

struct DgaMorphism {
    const Dga* source = nullptr;
    const Dga* target = nullptr;
    std::vector<Mat> maps;  // per degree 0..max_degree

    Vec apply(int p, const Vec& x) const { return maps[p].apply(x); }
};

// chain map + multiplicative + unit (+ W/F compatibility when both sides
// carry the structure and the flag is set).
Report validate_morphism(const DgaMorphism& f, bool check_filtrations = true);

struct OneQisReport {
    bool h0_iso = false;
    bool h1_iso = false;
    bool h2_inj = false;
    bool is_1qis() const { return h0_iso && h1_iso && h2_inj; }
};

OneQisReport check_morphism_1qis(const DgaMorphism& f);

// Same algebra viewed over Q(i).
Dga complexify(const Dga& a);

// Shifted filtration W'_i(A^r) = W_{i-r}(A^r). Multiplication compatibility
// is asserted; d-compatibility of the shifted filtration is returned in the
// report (it fails whenever d is nonzero across a W' jump, and the induced
// machinery only ever uses W' through cohomology).
std::pair<Dga, Report> dec_shift(const Dga& a);

}  // namespace hodgemc
