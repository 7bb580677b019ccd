#include "mhs.hpp"

#include <functional>
#include <sstream>

#include "errors.hpp"

namespace hodgemc {

namespace {

std::string pq_str(int p, int q) {
    std::ostringstream os;
    os << "(" << p << "," << q << ")";
    return os.str();
}

}  // namespace

Report check_hodge_structure(int dim, int weight, const DecFiltration& F) {
    Report rep;
    if (F.ambient != dim) throw input_error("hodge: filtration ambient mismatch");
    for (int p = std::min(F.lo, weight + 1 - F.hi); p <= std::max(F.hi, weight + 1 - F.lo); ++p) {
        Subspace fp = F.at(p);
        Subspace fq = F.at(weight + 1 - p).conj();
        bool ok = fp.dim() + fq.dim() == dim && fp.sum(fq).is_full();
        rep.add("F^" + std::to_string(p) + " (+) conj F^" + std::to_string(weight + 1 - p), ok,
                ok ? "" : "dims " + std::to_string(fp.dim()) + "+" + std::to_string(fq.dim()));
    }
    return rep;
}

Report check_mhs(const Mhs& m) {
    Report rep;
    if (m.W.ambient != m.dim || m.F.ambient != m.dim) throw input_error("mhs: ambient mismatch");
    rep.add("W rational", m.W.is_real());
    for (int n = m.W.lo; n <= m.W.hi; ++n) {
        Subspace wn = m.W.at(n);
        Subspace wn1 = m.W.at(n - 1);
        if (wn.dim() == wn1.dim()) continue;
        // Gr_n in canonical coordinates: W_{n-1} as a subobject of W_n.
        Quotient gr{Subspace::span_mat(coordinates_in(wn, wn1.basis))};
        std::map<int, Subspace> fl;
        for (int p = m.F.lo; p <= m.F.hi + 1; ++p) {
            Subspace cut = m.F.at(p).intersect(wn);
            fl[p] = gr.project_subspace(Subspace::span_mat(coordinates_in(wn, cut.basis)));
        }
        DecFiltration indF;
        indF.ambient = gr.dim();
        indF.lo = m.F.lo;
        indF.hi = m.F.hi + 1;
        indF.levels = fl;
        Report sub = check_hodge_structure(gr.dim(), n, indF);
        rep.add("Gr_" + std::to_string(n) + " weight-" + std::to_string(n) + " HS", sub.pass(),
                sub.pass() ? "" : sub.items.front().name);
    }
    return rep;
}

namespace {

Subspace bigrading_sum(const Bigrading& b, int dim,
                       const std::function<bool(int, int)>& keep) {
    Subspace acc = Subspace::zero(dim);
    for (auto& [pq, s] : b.comps)
        if (keep(pq.first, pq.second)) acc = acc.sum(s);
    return acc;
}

}  // namespace

Bigrading deligne_bigrading(const Mhs& m) {
    Bigrading out;
    out.dim = m.dim;
    int wlo = m.W.lo, whi = m.W.hi;
    int flo = m.F.lo, fhi = m.F.hi;
    int span = (whi - wlo) + (fhi - flo) + 2;
    for (int p = flo - span; p <= fhi + span; ++p) {
        for (int i = wlo; i <= whi; ++i) {
            int q = i - p;
            Subspace R = m.W.at(i).intersect(m.F.at(p));
            Subspace L = m.W.at(i).intersect(m.F.at(q).conj());
            for (int j = 2; i - j >= wlo - 1; ++j)
                L = L.sum(m.W.at(i - j).intersect(m.F.at(q - j + 1).conj()));
            Subspace I = R.intersect(L);
            if (!I.is_zero()) {
                // Remove the part already accounted for by lower-weight
                // components at the same (p,q)? Components are indexed by
                // (p,q); nothing to merge — record directly.
                out.comps[{p, q}] = I;
            }
        }
    }
    // The raw R∩L spaces at (p,q) contain nothing from other components;
    // verify all three guarantees before returning.
    int total = 0;
    Subspace all = Subspace::zero(m.dim);
    for (auto& [pq, s] : out.comps) {
        total += s.dim();
        all = all.sum(s);
    }
    if (total != m.dim || !all.is_full())
        throw invariant_error("deligne_bigrading: components do not decompose V");
    for (int i = wlo - 1; i <= whi; ++i) {
        Subspace acc = bigrading_sum(out, m.dim, [i](int p, int q) { return p + q <= i; });
        if (!(acc == m.W.at(i)))
            throw invariant_error("deligne_bigrading: W reconstruction failed at level " + std::to_string(i));
    }
    for (int p = flo; p <= fhi + 1; ++p) {
        Subspace acc = bigrading_sum(out, m.dim, [p](int pp, int) { return pp >= p; });
        if (!(acc == m.F.at(p)))
            throw invariant_error("deligne_bigrading: F reconstruction failed at level " + std::to_string(p));
    }
    for (auto& [pq, s] : out.comps) {
        auto [p, q] = pq;
        Subspace lower = bigrading_sum(out, m.dim, [&](int r, int t) { return r + t < p + q; });
        Subspace target = lower;
        auto it = out.comps.find({q, p});
        if (it != out.comps.end()) target = target.sum(it->second);
        if (!target.contains(s.conj()))
            throw invariant_error("deligne_bigrading: conjugation symmetry failed at " + pq_str(p, q));
    }
    return out;
}

bool is_r_split(const Bigrading& b) {
    for (auto& [pq, s] : b.comps) {
        auto it = b.comps.find({pq.second, pq.first});
        if (it == b.comps.end()) return false;
        if (!(s.conj() == it->second)) return false;
    }
    return true;
}

Mhs mhs_from_bigrading(const Bigrading& b) {
    int dim = b.dim;
    int total = 0;
    Subspace all = Subspace::zero(dim);
    for (auto& [pq, s] : b.comps) {
        if (s.ambient != dim) throw input_error("bigrading: ambient mismatch at " + pq_str(pq.first, pq.second));
        total += s.dim();
        all = all.sum(s);
    }
    if (total != dim || !all.is_full()) throw input_error("bigrading: components are not a direct sum decomposition");
    for (auto& [pq, s] : b.comps) {
        auto [p, q] = pq;
        Subspace target = Subspace::zero(dim);
        for (auto& [rs, t] : b.comps)
            if (rs.first + rs.second < p + q) target = target.sum(t);
        auto it = b.comps.find({q, p});
        if (it != b.comps.end()) target = target.sum(it->second);
        if (!target.contains(s.conj()))
            throw input_error("bigrading: conjugation symmetry fails at " + pq_str(p, q));
    }
    int wlo = 0, whi = 0, flo = 0, fhi = 0;
    bool first = true;
    for (auto& [pq, s] : b.comps) {
        int w = pq.first + pq.second;
        if (first) {
            wlo = whi = w;
            flo = fhi = pq.first;
            first = false;
        }
        wlo = std::min(wlo, w);
        whi = std::max(whi, w);
        flo = std::min(flo, pq.first);
        fhi = std::max(fhi, pq.first);
    }
    std::map<int, Subspace> wl, fl;
    for (int i = wlo; i <= whi; ++i) {
        Subspace acc = Subspace::zero(dim);
        for (auto& [pq, s] : b.comps)
            if (pq.first + pq.second <= i) acc = acc.sum(s);
        // W must come from a rational subspace: conjugation-stable with a
        // real RREF basis.
        if (!(acc.conj() == acc))
            throw input_error("bigrading: weight level " + std::to_string(i) + " is not defined over the real field");
        std::vector<Vec> real_rows;
        for (int r = 0; r < acc.basis.rows; ++r) {
            Vec row = acc.basis.row(r);
            Vec re(row.size()), im(row.size());
            for (size_t c = 0; c < row.size(); ++c) {
                re[c] = Scalar(row[c].re);
                im[c] = Scalar(row[c].im);
            }
            real_rows.push_back(re);
            real_rows.push_back(im);
        }
        Subspace rat = Subspace::span(dim, real_rows);
        if (rat.dim() != acc.dim())
            throw input_error("bigrading: weight level " + std::to_string(i) + " has no rational form");
        wl[i] = rat;
    }
    for (int p = flo; p <= fhi; ++p) {
        Subspace acc = Subspace::zero(dim);
        for (auto& [pq, s] : b.comps)
            if (pq.first >= p) acc = acc.sum(s);
        fl[p] = acc;
    }
    Mhs m;
    m.dim = dim;
    m.W = IncFiltration::from_levels(dim, wl);
    m.F = DecFiltration::from_levels(dim, fl);
    Report rep = check_mhs(m);
    if (!rep.pass()) throw input_error("bigrading: reconstructed pair is not a mixed Hodge structure");
    return m;
}

Mhs derived_mhs(DerivedKind kind, const Mhs& m1, const Mhs& m2) {
    Mhs out;
    switch (kind) {
        case DerivedKind::Dual:
            out.dim = m1.dim;
            out.W = dual_inc(m1.W);
            out.F = dual_dec(m1.F);
            break;
        case DerivedKind::Tensor:
            out.dim = m1.dim * m2.dim;
            out.W = tensor_inc(m1.W, m2.W);
            out.F = tensor_dec(m1.F, m2.F);
            break;
        case DerivedKind::Hom:
            out.dim = m1.dim * m2.dim;
            out.W = hom_inc(m1.W, m2.W);
            out.F = hom_dec(m1.F, m2.F);
            break;
    }
    Report rep = check_mhs(out);
    if (!rep.pass()) throw invariant_error("derived_mhs: result fails the mixed Hodge axioms");
    return out;
}

MorphismVerdict check_morphism(const Mat& f, const Mhs& m1, const Mhs& m2) {
    if (f.cols != m1.dim || f.rows != m2.dim) throw input_error("morphism: dimension mismatch");
    MorphismVerdict v;
    for (int i = std::min(m1.W.lo, m2.W.lo) - 1; i <= std::max(m1.W.hi, m2.W.hi); ++i)
        if (!m2.W.at(i).contains(m1.W.at(i).image(f))) {
            v.detail = "W incompatible at level " + std::to_string(i);
            return v;
        }
    for (int p = std::min(m1.F.lo, m2.F.lo); p <= std::max(m1.F.hi, m2.F.hi) + 1; ++p)
        if (!m2.F.at(p).contains(m1.F.at(p).image(f))) {
            v.detail = "F incompatible at level " + std::to_string(p);
            return v;
        }
    v.is_morphism = true;
    Subspace full_image = Subspace::full(m1.dim).image(f);
    v.strict = true;
    for (int i = m2.W.lo - 1; i <= m2.W.hi; ++i)
        if (!(full_image.intersect(m2.W.at(i)) == m1.W.at(i).image(f))) v.strict = false;
    for (int p = m2.F.lo; p <= m2.F.hi + 1; ++p)
        if (!(full_image.intersect(m2.F.at(p)) == m1.F.at(p).image(f))) v.strict = false;
    Bigrading b1 = deligne_bigrading(m1);
    Bigrading b2 = deligne_bigrading(m2);
    v.preserves_bigrading = true;
    for (auto& [pq, s] : b1.comps) {
        Subspace img = s.image(f);
        if (img.is_zero()) continue;
        auto it = b2.comps.find(pq);
        if (it == b2.comps.end() || !it->second.contains(img)) v.preserves_bigrading = false;
    }
    if (!v.strict || !v.preserves_bigrading)
        throw invariant_error("morphism of mixed Hodge structures failed strictness: " +
                              std::string(v.strict ? "bigrading" : "filtration image"));
    return v;
}

namespace {

Scalar weil_power(int p, int q) {
    // (sqrt(-1))^(p-q)
    int e = ((p - q) % 4 + 4) % 4;
    switch (e) {
        case 0: return Scalar::one();
        case 1: return Scalar::imaginary_unit();
        case 2: return Scalar(-1);
        default: return -Scalar::imaginary_unit();
    }
}

Scalar sesqui(const Mat& S, const Vec& u, const Vec& v) {
    Scalar acc;
    for (int r = 0; r < S.rows; ++r)
        for (int c = 0; c < S.cols; ++c)
            if (!S.at(r, c).is_zero()) acc += u[r] * S.at(r, c) * v[c].conj();
    return acc;
}

}  // namespace

Report check_polarization(int dim, int weight, const DecFiltration& F, const PolarizationForm& P) {
    Report rep;
    if (P.S.rows != dim || P.S.cols != dim) throw input_error("polarization: form dimension mismatch");
    rep.add("S real", P.S.is_real());
    bool sym_ok = true;
    Scalar sign = (weight % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (int r = 0; r < dim && sym_ok; ++r)
        for (int c = 0; c < dim; ++c)
            if (!(P.S.at(r, c) == sign * P.S.at(c, r))) {
                sym_ok = false;
                rep.add("(-1)^n symmetry", false, "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
                break;
            }
    if (sym_ok) rep.add("(-1)^n symmetry", true);
    if (!rep.pass()) return rep;

    Report hs = check_hodge_structure(dim, weight, F);
    rep.add("underlying Hodge structure", hs.pass());
    if (!hs.pass()) return rep;

    // Assemble the bigrading basis V^{p,q} = F^p ∩ conj(F^q).
    struct Piece {
        int p, q;
        Vec v;
    };
    std::vector<Piece> basis;
    for (int p = F.lo; p <= F.hi; ++p) {
        int q = weight - p;
        Subspace comp = F.at(p).intersect(F.at(q).conj());  // = V^{p,q} for a pure HS
        for (int r = 0; r < comp.basis.rows; ++r) basis.push_back({p, q, comp.basis.row(r)});
    }
    // Orthogonality of distinct components under the sesquilinear form.
    bool orth = true;
    for (size_t i = 0; i < basis.size() && orth; ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (basis[i].p == basis[j].p && basis[i].q == basis[j].q) continue;
            if (!sesqui(P.S, basis[i].v, basis[j].v).is_zero()) {
                orth = false;
                rep.add("bigrading orthogonality", false, pq_str(basis[i].p, basis[i].q) + " vs " + pq_str(basis[j].p, basis[j].q));
                break;
            }
        }
    if (orth) rep.add("bigrading orthogonality", true);

    // h(u,v) = S(Cu, conj v) hermitian and positive definite, decided by
    // exact leading principal minors.
    int n = static_cast<int>(basis.size());
    Mat H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H.at(i, j) = weil_power(basis[i].p, basis[i].q) * sesqui(P.S, basis[i].v, basis[j].v);
    bool herm = true;
    for (int i = 0; i < n && herm; ++i)
        for (int j = 0; j < n; ++j)
            if (!(H.at(i, j) == H.at(j, i).conj())) {
                herm = false;
                break;
            }
    rep.add("h hermitian", herm);
    if (!herm) return rep;
    bool posdef = true;
    for (int k = 1; k <= n && posdef; ++k) {
        // determinant of the leading k x k block by fraction-free elimination
        Mat blk(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) blk.at(i, j) = H.at(i, j);
        Scalar det = Scalar::one();
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (!blk.at(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = Scalar::zero();
                break;
            }
            if (piv != col) {
                for (int c = 0; c < k; ++c) std::swap(blk.at(piv, c), blk.at(col, c));
                det = -det;
            }
            det *= blk.at(col, col);
            Scalar inv = blk.at(col, col).inv();
            for (int r = col + 1; r < k; ++r) {
                Scalar f = blk.at(r, col) * inv;
                if (f.is_zero()) continue;
                for (int c = col; c < k; ++c) blk.at(r, c) -= f * blk.at(col, c);
            }
        }
        if (!det.is_real() || sgn(det.re) <= 0) {
            posdef = false;
            rep.add("h positive definite", false, "minor " + std::to_string(k));
        }
    }
    if (posdef) rep.add("h positive definite", true);
    return rep;
}

}  // namespace hodgemc
