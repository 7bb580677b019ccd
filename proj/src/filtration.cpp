#include "filtration.hpp"

#include <sstream>

#include "errors.hpp"

namespace hodgemc {

IncFiltration IncFiltration::trivial(int n, int level) {
    IncFiltration f;
    f.ambient = n;
    f.lo = level;
    f.hi = level;
    f.levels[level] = Subspace::full(n);
    return f;
}

IncFiltration IncFiltration::from_levels(int n, const std::map<int, Subspace>& given) {
    IncFiltration f;
    f.ambient = n;
    if (given.empty()) throw input_error("filtration: no levels given");
    for (auto& [i, s] : given)
        if (s.ambient != n) throw input_error("filtration: ambient mismatch at level " + std::to_string(i));
    f.lo = given.begin()->first;
    f.hi = given.rbegin()->first;
    Subspace prev = Subspace::zero(n);
    for (int i = f.lo; i <= f.hi; ++i) {
        auto it = given.find(i);
        if (it != given.end()) prev = it->second;
        f.levels[i] = prev;
    }
    f.validate();
    return f;
}

Subspace IncFiltration::at(int i) const {
    if (i < lo) return Subspace::zero(ambient);
    if (i > hi) return Subspace::full(ambient);
    return levels.at(i);
}

void IncFiltration::validate() const {
    Subspace prev = Subspace::zero(ambient);
    for (int i = lo; i <= hi; ++i) {
        const Subspace& cur = at(i);
        if (!cur.contains(prev)) throw input_error("filtration: not increasing at level " + std::to_string(i));
        prev = cur;
    }
    if (!at(hi).is_full()) throw input_error("filtration: not exhaustive");
}

int IncFiltration::weight_of(const Vec& v) const {
    if (vec_is_zero(v)) throw input_error("filtration: weight of zero vector");
    for (int i = lo; i <= hi; ++i)
        if (at(i).contains(v)) return i;
    throw invariant_error("filtration: exhaustiveness violated");
}

bool IncFiltration::is_real() const {
    for (auto& [i, s] : levels)
        if (!s.is_real()) return false;
    return true;
}

bool operator==(const IncFiltration& a, const IncFiltration& b) {
    if (a.ambient != b.ambient) return false;
    int lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
    for (int i = lo; i <= hi; ++i)
        if (!(a.at(i) == b.at(i))) return false;
    return true;
}

DecFiltration DecFiltration::trivial(int n, int level) {
    DecFiltration f;
    f.ambient = n;
    f.lo = level;
    f.hi = level;
    f.levels[level] = Subspace::full(n);
    return f;
}

DecFiltration DecFiltration::from_levels(int n, const std::map<int, Subspace>& given) {
    DecFiltration f;
    f.ambient = n;
    if (given.empty()) throw input_error("filtration: no levels given");
    for (auto& [i, s] : given)
        if (s.ambient != n) throw input_error("filtration: ambient mismatch at level " + std::to_string(i));
    f.lo = given.begin()->first;
    f.hi = given.rbegin()->first;
    // Fill gaps downward: F^p = next given level above p going up.
    Subspace prev = Subspace::full(n);
    for (int p = f.lo; p <= f.hi; ++p) {
        auto it = given.find(p);
        if (it != given.end()) prev = it->second;
        f.levels[p] = prev;
    }
    f.validate();
    return f;
}

Subspace DecFiltration::at(int p) const {
    if (p < lo) return Subspace::full(ambient);
    if (p > hi) return Subspace::zero(ambient);
    return levels.at(p);
}

void DecFiltration::validate() const {
    Subspace prev = Subspace::full(ambient);
    for (int p = lo; p <= hi; ++p) {
        const Subspace& cur = at(p);
        if (!prev.contains(cur)) throw input_error("filtration: not decreasing at level " + std::to_string(p));
        prev = cur;
    }
    if (!at(lo).is_full()) throw input_error("filtration: top level not full");
}

bool operator==(const DecFiltration& a, const DecFiltration& b) {
    if (a.ambient != b.ambient) return false;
    int lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
    for (int p = lo; p <= hi; ++p)
        if (!(a.at(p) == b.at(p))) return false;
    return true;
}

namespace {

// Normalizes a raw level map into a filtration, trimming constant tails.
IncFiltration make_inc(int ambient, std::map<int, Subspace> raw) {
    IncFiltration f;
    f.ambient = ambient;
    while (raw.size() > 1 && raw.begin()->second.is_zero()) raw.erase(raw.begin());
    while (raw.size() > 1 && std::prev(raw.end(), 2)->second.is_full()) raw.erase(std::prev(raw.end()));
    f.lo = raw.begin()->first;
    f.hi = raw.rbegin()->first;
    f.levels = std::move(raw);
    f.validate();
    return f;
}

DecFiltration make_dec(int ambient, std::map<int, Subspace> raw) {
    DecFiltration f;
    f.ambient = ambient;
    while (raw.size() > 1 && std::next(raw.begin())->second.is_full()) raw.erase(raw.begin());
    while (raw.size() > 1 && raw.rbegin()->second.is_zero()) raw.erase(std::prev(raw.end()));
    f.lo = raw.begin()->first;
    f.hi = raw.rbegin()->first;
    f.levels = std::move(raw);
    f.validate();
    return f;
}

}  // namespace

IncFiltration restrict_inc(const IncFiltration& f, const Subspace& s, bool in_s_coords) {
    std::map<int, Subspace> raw;
    for (int i = f.lo - 1; i <= f.hi; ++i) {
        Subspace cut = f.at(i).intersect(s);
        raw[i] = in_s_coords ? Subspace::span_mat(coordinates_in(s, cut.basis)) : cut;
    }
    return make_inc(in_s_coords ? s.dim() : f.ambient, std::move(raw));
}

IncFiltration quotient_inc(const IncFiltration& f, const Quotient& q) {
    std::map<int, Subspace> raw;
    for (int i = f.lo - 1; i <= f.hi; ++i) raw[i] = q.project_subspace(f.at(i));
    return make_inc(q.dim(), std::move(raw));
}

DecFiltration restrict_dec(const DecFiltration& f, const Subspace& s, bool in_s_coords) {
    std::map<int, Subspace> raw;
    for (int p = f.lo; p <= f.hi + 1; ++p) {
        Subspace cut = f.at(p).intersect(s);
        raw[p] = in_s_coords ? Subspace::span_mat(coordinates_in(s, cut.basis)) : cut;
    }
    return make_dec(in_s_coords ? s.dim() : f.ambient, std::move(raw));
}

DecFiltration quotient_dec(const DecFiltration& f, const Quotient& q) {
    std::map<int, Subspace> raw;
    for (int p = f.lo; p <= f.hi + 1; ++p) raw[p] = q.project_subspace(f.at(p));
    return make_dec(q.dim(), std::move(raw));
}

namespace {

// Annihilator of S inside the dual space, in dual coordinates (e_i^*).
Subspace annihilator(const Subspace& s) {
    return Subspace::span_mat(kernel(s.basis));
}

}  // namespace

IncFiltration dual_inc(const IncFiltration& f) {
    std::map<int, Subspace> raw;
    // W_k(V*) = ann(W_{-k-1}(V)): jumps live on [-hi-1+... ] — materialize
    // k in [-f.hi-1, -f.lo].
    for (int k = -f.hi - 1; k <= -f.lo; ++k) raw[k] = annihilator(f.at(-k - 1));
    return make_inc(f.ambient, std::move(raw));
}

DecFiltration dual_dec(const DecFiltration& f) {
    std::map<int, Subspace> raw;
    // F^p(V*) = ann(F^{1-p}(V)): p in [1-f.hi, 1-f.lo+1].
    for (int p = -f.hi; p <= 1 - f.lo + 1; ++p) raw[p] = annihilator(f.at(1 - p));
    return make_dec(f.ambient, std::move(raw));
}

Vec tensor_vec(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

namespace {

Subspace tensor_subspace(const Subspace& s1, const Subspace& s2) {
    std::vector<Vec> rows;
    for (int r1 = 0; r1 < s1.basis.rows; ++r1)
        for (int r2 = 0; r2 < s2.basis.rows; ++r2)
            rows.push_back(tensor_vec(s1.basis.row(r1), s2.basis.row(r2)));
    return Subspace::span(s1.ambient * s2.ambient, rows);
}

}  // namespace

IncFiltration tensor_inc(const IncFiltration& f1, const IncFiltration& f2) {
    int n = f1.ambient * f2.ambient;
    std::map<int, Subspace> raw;
    int lo = f1.lo + f2.lo, hi = f1.hi + f2.hi;
    for (int k = lo - 1; k <= hi; ++k) {
        Subspace acc = Subspace::zero(n);
        for (int i = f1.lo; i <= f1.hi; ++i) {
            int j = k - i;
            acc = acc.sum(tensor_subspace(f1.at(i), f2.at(std::min(j, f2.hi))));
        }
        raw[k] = acc;
    }
    return make_inc(n, std::move(raw));
}

DecFiltration tensor_dec(const DecFiltration& f1, const DecFiltration& f2) {
    int n = f1.ambient * f2.ambient;
    std::map<int, Subspace> raw;
    int lo = f1.lo + f2.lo, hi = f1.hi + f2.hi;
    for (int p = lo; p <= hi + 1; ++p) {
        Subspace acc = Subspace::zero(n);
        for (int r = f1.lo; r <= f1.hi; ++r) {
            int s = p - r;
            acc = acc.sum(tensor_subspace(f1.at(r), f2.at(std::max(s, f2.lo))));
        }
        raw[p] = acc;
    }
    return make_dec(n, std::move(raw));
}

Vec flatten_hom(const Mat& m) {
    Vec v(static_cast<size_t>(m.rows) * m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) v[static_cast<size_t>(r) * m.cols + c] = m.at(r, c);
    return v;
}

Mat unflatten_hom(const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols) throw input_error("hom: flatten size mismatch");
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = v[static_cast<size_t>(r) * cols + c];
    return m;
}

Subspace hom_transporter(const Subspace& src, const Subspace& dst, int n1, int n2) {
    // f with f(src) ⊆ dst: linear constraints π_dst(M u) = 0 per basis u of src.
    Quotient q{dst};
    Mat proj = q.projection_matrix();  // qd x n2
    int qd = proj.rows;
    int vars = n1 * n2;
    Mat constraint(src.basis.rows * qd, vars);
    for (int b = 0; b < src.basis.rows; ++b) {
        Vec u = src.basis.row(b);
        // row (b*qd + t), var (r,c): proj[t][r] * u[c]
        for (int t = 0; t < qd; ++t)
            for (int r = 0; r < n2; ++r) {
                if (proj.at(t, r).is_zero()) continue;
                for (int c = 0; c < n1; ++c)
                    if (!u[c].is_zero())
                        constraint.at(b * qd + t, r * n1 + c) = proj.at(t, r) * u[c];
            }
    }
    if (constraint.rows == 0) return Subspace::full(vars);
    return Subspace::span_mat(kernel(constraint));
}

IncFiltration hom_inc(const IncFiltration& f1, const IncFiltration& f2) {
    int n1 = f1.ambient, n2 = f2.ambient;
    int vars = n1 * n2;
    std::map<int, Subspace> raw;
    int lo = f2.lo - f1.hi, hi = f2.hi - f1.lo;
    for (int k = lo - 1; k <= hi; ++k) {
        Subspace acc = Subspace::full(vars);
        for (int i = f1.lo; i <= f1.hi; ++i)
            acc = acc.intersect(hom_transporter(f1.at(i), f2.at(i + k), n1, n2));
        raw[k] = acc;
    }
    return make_inc(vars, std::move(raw));
}

DecFiltration hom_dec(const DecFiltration& f1, const DecFiltration& f2) {
    int n1 = f1.ambient, n2 = f2.ambient;
    int vars = n1 * n2;
    std::map<int, Subspace> raw;
    int lo = f2.lo - f1.hi, hi = f2.hi - f1.lo;
    for (int p = lo; p <= hi + 1; ++p) {
        Subspace acc = Subspace::full(vars);
        for (int r = f1.lo; r <= f1.hi + 1; ++r)
            acc = acc.intersect(hom_transporter(f1.at(r), f2.at(r + p), n1, n2));
        raw[p] = acc;
    }
    return make_dec(vars, std::move(raw));
}

}  // namespace hodgemc
