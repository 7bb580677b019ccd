#include "tdt.hpp"

#include "errors.hpp"

namespace hodgemc {

TdtElement TdtElement::constant(const Dga& dga, int degree, const Vec& value) {
    TdtElement e;
    e.dga = &dga;
    e.degree = degree;
    if (static_cast<int>(value.size()) != dga.dim(degree)) throw input_error("tdt: value dimension mismatch");
    if (!vec_is_zero(value)) e.a[0] = value;
    return e;
}

bool TdtElement::is_zero() const {
    for (auto& [i, v] : a)
        if (!vec_is_zero(v)) return false;
    for (auto& [i, v] : b)
        if (!vec_is_zero(v)) return false;
    return true;
}

void TdtElement::trim() {
    for (auto it = a.begin(); it != a.end();)
        it = vec_is_zero(it->second) ? a.erase(it) : std::next(it);
    for (auto it = b.begin(); it != b.end();)
        it = vec_is_zero(it->second) ? b.erase(it) : std::next(it);
}

Vec TdtElement::eval0() const {
    auto it = a.find(0);
    return it != a.end() ? it->second : vec_zero(dga->dim(degree));
}

Vec TdtElement::eval1() const {
    Vec out = vec_zero(dga->dim(degree));
    for (auto& [i, v] : a) out = vec_add(out, v);
    return out;
}

Vec TdtElement::integrate01() const {
    Vec out = vec_zero(dga->dim(degree - 1));
    Scalar sign = (degree - 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (auto& [i, v] : b) out = vec_add(out, vec_scaled(v, sign * Scalar::of(1, i + 1)));
    return out;
}

TdtElement TdtElement::integrate0t() const {
    TdtElement out;
    out.dga = dga;
    out.degree = degree - 1;
    Scalar sign = (degree - 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (auto& [i, v] : b) out.a[i + 1] = vec_scaled(v, sign * Scalar::of(1, i + 1));
    out.trim();
    return out;
}

TdtElement TdtElement::d() const {
    TdtElement out;
    out.dga = dga;
    out.degree = degree + 1;
    for (auto& [i, v] : a) {
        Vec dv = dga->diff(degree, v);
        if (!vec_is_zero(dv)) {
            auto it = out.a.find(i);
            if (it == out.a.end())
                out.a[i] = dv;
            else
                it->second = vec_add(it->second, dv);
        }
        if (i > 0) {
            Scalar coef = (degree % 2 == 0 ? Scalar(1) : Scalar(-1)) * Scalar(i);
            Vec term = vec_scaled(v, coef);
            auto it = out.b.find(i - 1);
            if (it == out.b.end())
                out.b[i - 1] = term;
            else
                it->second = vec_add(it->second, term);
        }
    }
    for (auto& [i, v] : b) {
        Vec dv = dga->diff(degree - 1, v);
        if (!vec_is_zero(dv)) {
            auto it = out.b.find(i);
            if (it == out.b.end())
                out.b[i] = dv;
            else
                it->second = vec_add(it->second, dv);
        }
    }
    out.trim();
    return out;
}

TdtElement TdtElement::wedge(const TdtElement& o) const {
    if (dga != o.dga) throw input_error("tdt: wedge across different algebras");
    TdtElement out;
    out.dga = dga;
    out.degree = degree + o.degree;
    int n = out.degree;
    auto add_a = [&](int i, const Vec& v) {
        if (v.empty() || vec_is_zero(v)) return;
        auto it = out.a.find(i);
        if (it == out.a.end())
            out.a[i] = v;
        else
            it->second = vec_add(it->second, v);
    };
    auto add_b = [&](int i, const Vec& v) {
        if (v.empty() || vec_is_zero(v)) return;
        auto it = out.b.find(i);
        if (it == out.b.end())
            out.b[i] = v;
        else
            it->second = vec_add(it->second, v);
    };
    if (n <= dga->max_degree) {
        for (auto& [i, x] : a)
            for (auto& [j, y] : o.a) add_a(i + j, dga->wedge(degree, x, o.degree, y));
    }
    if (n - 1 <= dga->max_degree) {
        // (a t^i) ∧ (b t^j dt) = (a∧b) t^{i+j} dt
        for (auto& [i, x] : a)
            for (auto& [j, y] : o.b) add_b(i + j, dga->wedge(degree, x, o.degree - 1, y));
        // (b t^i dt) ∧ (a t^j) = (-1)^{|a|} (b∧a) t^{i+j} dt
        for (auto& [i, x] : b)
            for (auto& [j, y] : o.a) {
                Vec w = dga->wedge(degree - 1, x, o.degree, y);
                add_b(i + j, o.degree % 2 == 0 ? w : vec_scaled(w, Scalar(-1)));
            }
    }
    out.trim();
    return out;
}

TdtElement TdtElement::operator+(const TdtElement& o) const {
    if (dga != o.dga || degree != o.degree) throw input_error("tdt: sum shape mismatch");
    TdtElement out = *this;
    for (auto& [i, v] : o.a) {
        auto it = out.a.find(i);
        if (it == out.a.end())
            out.a[i] = v;
        else
            it->second = vec_add(it->second, v);
    }
    for (auto& [i, v] : o.b) {
        auto it = out.b.find(i);
        if (it == out.b.end())
            out.b[i] = v;
        else
            it->second = vec_add(it->second, v);
    }
    out.trim();
    return out;
}

TdtElement TdtElement::operator-(const TdtElement& o) const { return *this + o.scaled(Scalar(-1)); }

TdtElement TdtElement::scaled(const Scalar& c) const {
    TdtElement out = *this;
    for (auto& [i, v] : out.a) v = vec_scaled(v, c);
    for (auto& [i, v] : out.b) v = vec_scaled(v, c);
    out.trim();
    return out;
}

bool operator==(const TdtElement& x, const TdtElement& y) {
    if (x.degree != y.degree) return false;
    TdtElement d = x - y;
    return d.is_zero();
}

TdtElement Homotopy::apply(int p, const Vec& x) const {
    TdtElement out = TdtElement::zero(*target, p);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out = out + values[p][i].scaled(x[i]);
    return out;
}

DgaMorphism Homotopy::eval0() const {
    DgaMorphism f;
    f.source = source;
    f.target = target;
    for (int p = 0; p <= source->max_degree; ++p) {
        Mat m(target->dim(p), source->dim(p));
        for (int j = 0; j < source->dim(p); ++j) {
            Vec v = values[p][j].eval0();
            for (int i = 0; i < target->dim(p); ++i) m.at(i, j) = v[i];
        }
        f.maps.push_back(m);
    }
    return f;
}

DgaMorphism Homotopy::eval1() const {
    DgaMorphism f;
    f.source = source;
    f.target = target;
    for (int p = 0; p <= source->max_degree; ++p) {
        Mat m(target->dim(p), source->dim(p));
        for (int j = 0; j < source->dim(p); ++j) {
            Vec v = values[p][j].eval1();
            for (int i = 0; i < target->dim(p); ++i) m.at(i, j) = v[i];
        }
        f.maps.push_back(m);
    }
    return f;
}

Report check_homotopy(const Homotopy& H, const DgaMorphism& phi0, const DgaMorphism& phi1) {
    Report rep;
    const Dga& A = *H.source;
    bool shape = static_cast<int>(H.values.size()) == A.max_degree + 1;
    for (int p = 0; p <= A.max_degree && shape; ++p)
        if (static_cast<int>(H.values[p].size()) != A.dim(p)) shape = false;
    rep.add("shapes", shape);
    if (!shape) return rep;

    rep.add("unit", H.values[0].empty() ||
                        H.values[0][0] == TdtElement::constant(*H.target, 0, H.target->unit()));

    bool chain = true;
    for (int p = 0; p < A.max_degree && chain; ++p)
        for (int j = 0; j < A.dim(p); ++j) {
            Vec e = A.zero_elt(p);
            e[j] = Scalar::one();
            if (!(H.values[p][j].d() == H.apply(p + 1, A.diff(p, e)))) {
                chain = false;
                break;
            }
        }
    rep.add("chain map", chain);

    bool multip = true;
    for (int p = 0; p <= A.max_degree && multip; ++p)
        for (int q = 0; p + q <= A.max_degree && multip; ++q)
            for (int i = 0; i < A.dim(p) && multip; ++i)
                for (int j = 0; j < A.dim(q); ++j) {
                    Vec ei = A.zero_elt(p), ej = A.zero_elt(q);
                    ei[i] = Scalar::one();
                    ej[j] = Scalar::one();
                    TdtElement lhs = H.apply(p + q, A.wedge(p, ei, q, ej));
                    TdtElement rhs = H.values[p][i].wedge(H.values[q][j]);
                    if (!(lhs == rhs)) {
                        multip = false;
                        break;
                    }
                }
    rep.add("multiplicative", multip);

    bool end0 = true, end1 = true;
    for (int p = 0; p <= A.max_degree; ++p)
        for (int j = 0; j < A.dim(p); ++j) {
            Vec e = A.zero_elt(p);
            e[j] = Scalar::one();
            if (!(H.values[p][j].eval0() == phi0.apply(p, e))) end0 = false;
            if (!(H.values[p][j].eval1() == phi1.apply(p, e))) end1 = false;
        }
    rep.add("endpoint t=0", end0);
    rep.add("endpoint t=1", end1);

    if (A.W && H.target->W) {
        bool wc = true;
        for (int p = 0; p <= A.max_degree && wc; ++p) {
            const IncFiltration& wp = (*A.W)[p];
            for (int lv = wp.lo; lv <= wp.hi && wc; ++lv) {
                Subspace s = wp.at(lv);
                for (int r = 0; r < s.basis.rows; ++r) {
                    TdtElement img = H.apply(p, s.basis.row(r));
                    Subspace tgt_n = H.target->W_at(p, lv);
                    Subspace tgt_n1 = H.target->W_at(p - 1, lv);
                    for (auto& [i, v] : img.a)
                        if (!tgt_n.contains(v)) wc = false;
                    for (auto& [i, v] : img.b)
                        if (!tgt_n1.contains(v)) wc = false;
                    if (!wc) break;
                }
            }
        }
        rep.add("W compatible", wc);
    }
    return rep;
}

}  // namespace hodgemc
