#include "linalg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace hodgemc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

void Mat::set_row(int r, const Vec& v) {
    if (static_cast<int>(v.size()) != cols) throw input_error("matrix: row size mismatch");
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::conj() const {
    Mat t(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) t.a[i] = a[i].conj();
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw input_error("matrix: product dimension mismatch");
    Mat p(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            if (at(r, k).is_zero()) continue;
            for (int c = 0; c < o.cols; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
        }
    return p;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw input_error("matrix: sum dimension mismatch");
    Mat p = *this;
    for (size_t i = 0; i < a.size(); ++i) p.a[i] += o.a[i];
    return p;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw input_error("matrix: difference dimension mismatch");
    Mat p = *this;
    for (size_t i = 0; i < a.size(); ++i) p.a[i] -= o.a[i];
    return p;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat p = *this;
    for (auto& x : p.a) x *= c;
    return p;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols) throw input_error("matrix: apply dimension mismatch");
    Vec out(rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_real() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_real(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vector: sum size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vector: difference size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

Vec vec_zero(int n) { return Vec(static_cast<size_t>(n)); }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_conj(const Vec& v) {
    Vec r = v;
    for (auto& x : r) x = x.conj();
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int piv = -1;
        for (int r = lead; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
        Scalar inv = m.at(lead, col).inv();
        for (int c = col; c < m.cols; ++c) m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

int rank_of(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw input_error("solve: rhs size mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    Vec x = vec_zero(m.cols);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    return x;
}

Mat kernel(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat out(static_cast<int>(free_cols.size()), m.cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.at(static_cast<int>(k), fc) = Scalar::one();
        for (size_t i = 0; i < pivots.size(); ++i)
            out.at(static_cast<int>(k), pivots[i]) = -r.at(static_cast<int>(i), fc);
    }
    rref(out);
    return out;
}

Subspace Subspace::full(int n) {
    Subspace s(n);
    s.basis = Mat::identity(n);
    return s;
}

Subspace Subspace::span(int n, const std::vector<Vec>& rows) {
    Mat m(static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
    Subspace s(n);
    s.basis = m;
    std::vector<int> piv = rref(s.basis);
    Mat trimmed(static_cast<int>(piv.size()), n);
    for (int r = 0; r < trimmed.rows; ++r) trimmed.set_row(r, s.basis.row(r));
    s.basis = trimmed;
    return s;
}

Subspace Subspace::span_mat(Mat rows) {
    std::vector<Vec> v;
    v.reserve(rows.rows);
    for (int r = 0; r < rows.rows; ++r) v.push_back(rows.row(r));
    return span(rows.cols, v);
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient) throw input_error("subspace: ambient mismatch");
    Vec w = v;
    for (int r = 0; r < basis.rows; ++r) {
        int pc = -1;
        for (int c = 0; c < ambient; ++c)
            if (!basis.at(r, c).is_zero()) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        if (!w[pc].is_zero()) {
            Scalar f = w[pc];
            for (int c = 0; c < ambient; ++c) w[c] -= f * basis.at(r, c);
        }
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient != other.ambient) throw input_error("subspace: ambient mismatch");
    for (int r = 0; r < other.basis.rows; ++r)
        if (!contains(other.basis.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient != other.ambient) throw input_error("subspace: ambient mismatch");
    std::vector<Vec> rows;
    for (int r = 0; r < basis.rows; ++r) rows.push_back(basis.row(r));
    for (int r = 0; r < other.basis.rows; ++r) rows.push_back(other.basis.row(r));
    return span(ambient, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient != other.ambient) throw input_error("subspace: ambient mismatch");
    int k = basis.rows, m = other.basis.rows;
    if (k == 0 || m == 0) return zero(ambient);
    // v = x*A = y*B  <=>  [x|y] lies in the left kernel of [A; -B].
    Mat stacked(k + m, ambient);
    for (int r = 0; r < k; ++r) stacked.set_row(r, basis.row(r));
    for (int r = 0; r < m; ++r) stacked.set_row(k + r, vec_scaled(other.basis.row(r), Scalar(-1)));
    Mat ker = kernel(stacked.transpose());
    std::vector<Vec> rows;
    for (int r = 0; r < ker.rows; ++r) {
        Vec v = vec_zero(ambient);
        for (int i = 0; i < k; ++i)
            if (!ker.at(r, i).is_zero()) v = vec_add(v, vec_scaled(basis.row(i), ker.at(r, i)));
        rows.push_back(v);
    }
    return span(ambient, rows);
}

Subspace Subspace::conj() const {
    Subspace s(ambient);
    s.basis = basis.conj();
    rref(s.basis);  // conjugate of an RREF is RREF, but renormalize anyway
    return s;
}

Subspace Subspace::image(const Mat& m) const {
    if (m.cols != ambient) throw input_error("subspace: image map dimension mismatch");
    std::vector<Vec> rows;
    for (int r = 0; r < basis.rows; ++r) rows.push_back(m.apply(basis.row(r)));
    return span(m.rows, rows);
}

Subspace Subspace::preimage(const Mat& m) const {
    if (m.rows != ambient) throw input_error("subspace: preimage map dimension mismatch");
    Quotient q{*this};
    Mat constraint = q.projection_matrix() * m;
    return span_mat(kernel(constraint));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    return solve(basis.transpose(), v);
}

std::vector<Vec> quotient_basis(const Subspace& sub) {
    Quotient q{sub};
    std::vector<Vec> reps;
    for (int c : q.free_cols) {
        Vec e = vec_zero(sub.ambient);
        e[c] = Scalar::one();
        reps.push_back(e);
    }
    return reps;
}

Quotient::Quotient(Subspace s) : sub(std::move(s)) {
    std::vector<bool> is_pivot(sub.ambient, false);
    for (int r = 0; r < sub.basis.rows; ++r)
        for (int c = 0; c < sub.ambient; ++c)
            if (!sub.basis.at(r, c).is_zero()) {
                is_pivot[c] = true;
                break;
            }
    for (int c = 0; c < sub.ambient; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
}

Vec Quotient::project(const Vec& v) const {
    if (static_cast<int>(v.size()) != sub.ambient) throw input_error("quotient: ambient mismatch");
    Vec w = v;
    for (int r = 0; r < sub.basis.rows; ++r) {
        int pc = -1;
        for (int c = 0; c < sub.ambient; ++c)
            if (!sub.basis.at(r, c).is_zero()) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        if (!w[pc].is_zero()) {
            Scalar f = w[pc];
            for (int c = 0; c < sub.ambient; ++c) w[c] -= f * sub.basis.at(r, c);
        }
    }
    Vec out(free_cols.size());
    for (size_t i = 0; i < free_cols.size(); ++i) out[i] = w[free_cols[i]];
    return out;
}

Vec Quotient::lift(const Vec& q) const {
    if (q.size() != free_cols.size()) throw input_error("quotient: coordinate size mismatch");
    Vec v = vec_zero(sub.ambient);
    for (size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = q[i];
    return v;
}

Mat Quotient::projection_matrix() const {
    Mat p(dim(), sub.ambient);
    for (int c = 0; c < sub.ambient; ++c) {
        Vec e = vec_zero(sub.ambient);
        e[c] = Scalar::one();
        Vec q = project(e);
        for (int r = 0; r < dim(); ++r) p.at(r, c) = q[r];
    }
    return p;
}

Mat Quotient::lift_matrix() const {
    Mat l(sub.ambient, dim());
    for (int i = 0; i < dim(); ++i) l.at(free_cols[i], i) = Scalar::one();
    return l;
}

Subspace Quotient::project_subspace(const Subspace& s) const {
    if (s.ambient != sub.ambient) throw input_error("quotient: ambient mismatch");
    std::vector<Vec> rows;
    for (int r = 0; r < s.basis.rows; ++r) rows.push_back(project(s.basis.row(r)));
    return Subspace::span(dim(), rows);
}

Mat coordinates_in(const Subspace& space, const Mat& vectors) {
    if (vectors.cols != space.ambient) throw input_error("coordinates: ambient mismatch");
    Mat out(vectors.rows, space.dim());
    for (int r = 0; r < vectors.rows; ++r) {
        auto c = space.coordinates(vectors.row(r));
        if (!c) throw input_error("coordinates: vector outside subspace");
        out.set_row(r, *c);
    }
    return out;
}

Mat pivot_coords_matrix(const Subspace& space) {
    Mat out(space.dim(), space.ambient);
    for (int r = 0; r < space.basis.rows; ++r)
        for (int c = 0; c < space.ambient; ++c)
            if (!space.basis.at(r, c).is_zero()) {
                out.at(r, c) = Scalar::one();
                break;
            }
    return out;
}

}  // namespace hodgemc
