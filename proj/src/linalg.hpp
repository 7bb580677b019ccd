#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace hodgemc {

using Vec = std::vector<Scalar>;

// Dense matrix over Q(i), row-major. Linear maps act on column vectors:
// f(v) = M*v with M sized (dim target) x (dim source).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(int n);

    Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    Mat transpose() const;
    Mat conj() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;

    bool is_zero() const;
    bool is_real() const;

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
Vec vec_zero(int n);
bool vec_is_zero(const Vec& v);
Vec vec_conj(const Vec& v);

// In-place reduced row echelon form with the canonical pivot order
// (leftmost column first, pivots normalized to 1, zeros above and below).
// Returns the pivot columns in order.
std::vector<int> rref(Mat& m);

int rank_of(Mat m);

// Solves M x = b. Free variables are set to zero under the canonical pivot
// order; returns nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Basis of {x : M x = 0}, returned as the rows of the result in canonical
// (RREF) form.
Mat kernel(const Mat& m);

// A subspace of Q(i)^n held in canonical reduced row-echelon form, so two
// subspaces are equal iff their matrices are equal.
struct Subspace {
    int ambient = 0;
    Mat basis;  // basis.cols == ambient, rows in RREF with no zero rows

    Subspace() = default;
    explicit Subspace(int n) : ambient(n), basis(0, n) {}

    static Subspace zero(int n) { return Subspace(n); }
    static Subspace full(int n);
    static Subspace span(int n, const std::vector<Vec>& rows);
    static Subspace span_mat(Mat rows);

    int dim() const { return basis.rows; }
    bool is_zero() const { return basis.rows == 0; }
    bool is_full() const { return basis.rows == ambient; }
    bool is_real() const { return basis.is_real(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace conj() const;

    // Image under the linear map m (m.cols == ambient).
    Subspace image(const Mat& m) const;
    // {v : m v in *this}, for m with m.rows == ambient.
    Subspace preimage(const Mat& m) const;

    // Coordinates of v in terms of the basis rows; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient == y.ambient && x.basis == y.basis;
    }
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
};

// Canonical coset representatives completing a basis of `sub` to the ambient
// space: the standard basis vectors at the non-pivot columns of sub's RREF.
std::vector<Vec> quotient_basis(const Subspace& sub);

// Quotient V/S with canonical coordinates: the entries of (v reduced mod S)
// at the non-pivot columns of S. project() is linear, lift() is its canonical
// right inverse.
struct Quotient {
    Subspace sub;
    std::vector<int> free_cols;

    explicit Quotient(Subspace s);

    int dim() const { return static_cast<int>(free_cols.size()); }
    Vec project(const Vec& v) const;
    Vec lift(const Vec& q) const;
    Mat projection_matrix() const;  // dim() x ambient
    Mat lift_matrix() const;        // ambient x dim()
    Subspace project_subspace(const Subspace& s) const;
};

// Rows of `vectors` expressed in coordinates w.r.t. the rows of `space`.
// Throws input_error when some row lies outside `space`.
Mat coordinates_in(const Subspace& space, const Mat& vectors);

// Linear extension of "coordinates w.r.t. the RREF basis of space": since
// each basis row has a 1 at its pivot and 0 at the other pivots, the r-th
// coordinate of any v in the space is v[pivot_r]. Returns the dim x ambient
// selection matrix; it agrees with coordinates_in on the space itself.
Mat pivot_coords_matrix(const Subspace& space);

}  // namespace hodgemc
