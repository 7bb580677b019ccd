#include "mhd.hpp"

#include <set>
#include <sstream>

#include "errors.hpp"

namespace hodgemc {

namespace {

std::string cell_str(int p, int q) {
    std::ostringstream os;
    os << "(" << p << "," << q << ")";
    return os.str();
}

// Chart for E_0^{p,q} = W_{-p}(A^n) / W_{-p-1}(A^n), n = p+q: canonical
// coordinates with linear project/lift through the W_{-p} basis.
struct Cell0 {
    Subspace wn;    // W_{-p}(A^n)
    Quotient quot;  // W_{-p-1} inside wn
    Mat proj;       // dim(E0) x dim(A^n); valid on W_{-p}
    Mat lift;       // dim(A^n) x dim(E0)

    explicit Cell0(const Dga& a, int p, int n)
        : wn(a.W_at(n, -p)),
          quot(Subspace::span_mat(coordinates_in(wn, a.W_at(n, -p - 1).basis))) {
        proj = quot.projection_matrix() * pivot_coords_matrix(wn);
        lift = wn.basis.transpose() * quot.lift_matrix();
    }

    int dim() const { return quot.dim(); }

    Vec project(const Dga&, int, const Vec& v) const {
        if (!wn.contains(v)) throw input_error("spectral page: vector outside the W level");
        return proj.apply(v);
    }
};

}  // namespace

SpectralPage w_spectral_page(const Dga& a, int r) {
    if (r != 0 && r != 1) throw input_error("spectral page: only E0 and E1 are computed");
    SpectralPage page;
    page.r = r;
    int wlo = 0, whi = 0;
    if (a.W) {
        wlo = 1 << 30;
        whi = -(1 << 30);
        for (auto& f : *a.W) {
            wlo = std::min(wlo, f.lo);
            whi = std::max(whi, f.hi);
        }
    }
    // decreasing filtration W^p = W_{-p}: p ranges over [-whi, -wlo]
    for (int p = -whi; p <= -wlo; ++p) {
        for (int n = 0; n <= a.max_degree; ++n) {
            int q = n - p;
            Cell0 cell(a, p, n);
            if (cell.dim() == 0) continue;
            if (r == 0) {
                SpectralCell out;
                out.p = p;
                out.q = q;
                out.dim = cell.dim();
                for (int i = 0; i < cell.dim(); ++i) {
                    Vec e = vec_zero(cell.dim());
                    e[i] = Scalar::one();
                    out.reps.push_back(cell.lift.apply(e));
                }
                if (a.bidegrees) {
                    std::map<int, Subspace> lv;
                    DecFiltration F = a.F_at(n);
                    for (int s = F.lo; s <= F.hi + 1; ++s) {
                        Subspace cut = F.at(s).intersect(cell.wn);
                        lv[s] = Subspace::span_mat((cell.proj * cut.basis.transpose()).transpose());
                    }
                    out.F = DecFiltration::from_levels(cell.dim(), lv);
                }
                page.cells[{p, q}] = std::move(out);
            } else {
                // E1 = ker d0 / im d0 within the E0 cell chain
                // d0 : E0^{p,q-1} -> E0^{p,q} -> E0^{p,q+1} induced by d.
                Cell0 below(a, p, n - 1);
                Mat d_in = n == 0 ? Mat(cell.dim(), 0)
                                  : cell.proj * a.d[n - 1] * below.lift;  // E0^{p,q-1} -> E0^{p,q}
                Mat d_out;
                if (n >= a.max_degree) {
                    d_out = Mat(0, cell.dim());
                } else {
                    Cell0 above(a, p, n + 1);
                    d_out = above.proj * a.d[n] * cell.lift;
                }
                Subspace z = Subspace::span_mat(kernel(d_out));
                Subspace bnd = Subspace::full(d_in.cols).image(d_in);
                Mat bz = coordinates_in(z, bnd.basis);
                Quotient h{Subspace::span_mat(bz)};
                if (h.dim() == 0) continue;
                SpectralCell out;
                out.p = p;
                out.q = q;
                out.dim = h.dim();
                std::vector<Vec> e0_reps;
                for (int i = 0; i < h.dim(); ++i) {
                    Vec hq = vec_zero(h.dim());
                    hq[i] = Scalar::one();
                    Vec zc = h.lift(hq);
                    Vec e0 = vec_zero(cell.dim());
                    for (int t = 0; t < z.basis.rows; ++t)
                        if (!zc[t].is_zero()) e0 = vec_add(e0, vec_scaled(z.basis.row(t), zc[t]));
                    e0_reps.push_back(e0);
                    out.reps.push_back(cell.lift.apply(e0));
                }
                if (a.bidegrees) {
                    // induced F on the subquotient: classes with a
                    // representative in F^s
                    DecFiltration F = a.F_at(n);
                    std::map<int, Subspace> lv;
                    for (int s = F.lo; s <= F.hi + 1; ++s) {
                        Subspace cut0 = Subspace::span_mat(
                            (cell.proj * F.at(s).intersect(cell.wn).basis.transpose()).transpose());
                        Subspace cz = cut0.intersect(z);
                        std::vector<Vec> rows;
                        for (int t = 0; t < cz.basis.rows; ++t) {
                            auto co = z.coordinates(cz.basis.row(t));
                            rows.push_back(h.project(*co));
                        }
                        lv[s] = Subspace::span(h.dim(), rows);
                    }
                    out.F = DecFiltration::from_levels(h.dim(), lv);
                }
                page.cells[{p, q}] = std::move(out);
            }
        }
    }
    return page;
}

Vec page_class_of(const Dga& a, const SpectralPage& page, int p, int q, const Vec& v) {
    const SpectralCell* c = page.cell(p, q);
    if (!c) {
        if (!a.W_at(p + q, -p).contains(v) ) throw input_error("page class: outside W level");
        return Vec();
    }
    int n = p + q;
    Cell0 cell(a, p, n);
    Vec e0 = cell.project(a, n, v);
    if (page.r == 0) return e0;
    // E1 coordinates: express in ker(d_out) then mod boundaries
    Mat d_out;
    if (n >= a.max_degree) {
        d_out = Mat(0, cell.dim());
    } else {
        Cell0 above(a, p, n + 1);
        d_out = above.proj * a.d[n] * cell.lift;
    }
    Subspace z = Subspace::span_mat(kernel(d_out));
    Cell0 below(a, p, n - 1);
    Mat d_in = n == 0 ? Mat(cell.dim(), 0) : cell.proj * a.d[n - 1] * below.lift;
    Subspace bnd = Subspace::full(d_in.cols).image(d_in);
    Quotient h{Subspace::span_mat(coordinates_in(z, bnd.basis))};
    auto co = z.coordinates(e0);
    if (!co) throw input_error("page class: representative is not d0-closed");
    return h.project(*co);
}

Report check_mhd(const MixedHodgeDiagram& m) {
    Report rep;
    // structural gates
    Report ra = validate_dga(m.A);
    Report rb = validate_dga(m.B);
    rep.add("A valid", ra.pass());
    rep.add("B valid", rb.pass());
    bool w1a = true, w1b = true;
    for (int p = 0; p <= m.A.max_degree; ++p)
        if (!m.A.W_at(p, -1).is_zero()) w1a = false;
    for (int p = 0; p <= m.B.max_degree; ++p)
        if (!m.B.W_at(p, -1).is_zero()) w1b = false;
    rep.add("W_{-1}(A) = 0", w1a);
    rep.add("W_{-1}(B) = 0", w1b);
    rep.add("B carries bidegrees", m.B.has_bidegrees());
    DgaMorphism io = m.iota();
    Report ri = validate_morphism(io);
    rep.add("iota is a filtered DGA morphism", ri.pass());
    if (!rep.pass()) return rep;

    SpectralPage ea = w_spectral_page(m.A_c, 1);
    SpectralPage eb = w_spectral_page(m.B, 1);

    // axiom 1: iota* bijective cell by cell
    bool ax1 = true;
    std::string wit1;
    std::map<std::pair<int, int>, Mat> iota_star;  // per-cell matrix E1(A) -> E1(B)
    std::set<std::pair<int, int>> all_cells;
    for (auto& [pq, c] : ea.cells) all_cells.insert(pq);
    for (auto& [pq, c] : eb.cells) all_cells.insert(pq);
    for (auto& pq : all_cells) {
        const SpectralCell* ca = ea.cell(pq.first, pq.second);
        const SpectralCell* cb = eb.cell(pq.first, pq.second);
        int da = ca ? ca->dim : 0;
        int db = cb ? cb->dim : 0;
        if (da != db) {
            ax1 = false;
            if (wit1.empty()) wit1 = cell_str(pq.first, pq.second);
            continue;
        }
        if (da == 0) continue;
        Mat mm(db, da);
        for (int j = 0; j < da; ++j) {
            Vec img = io.apply(pq.first + pq.second, ca->reps[j]);
            Vec cls = page_class_of(m.B, eb, pq.first, pq.second, img);
            for (int i = 0; i < db; ++i) mm.at(i, j) = cls[i];
        }
        if (rank_of(mm) != da) {
            ax1 = false;
            if (wit1.empty()) wit1 = cell_str(pq.first, pq.second);
        } else {
            iota_star[pq] = mm;
        }
    }
    rep.add("axiom 1: iota* iso on E1", ax1, wit1);

    // axiom 2: d0 on E0(B) strictly compatible with F, cell by cell
    bool ax2 = true;
    std::string wit2;
    SpectralPage e0b = w_spectral_page(m.B, 0);
    for (auto& [pq, c] : e0b.cells) {
        auto [p, q] = pq;
        int n = p + q;
        if (n >= m.B.max_degree) continue;
        const SpectralCell* next = e0b.cell(p, q + 1);
        if (!next) continue;
        // d0 matrix in cell coordinates
        Mat d0(next->dim, c.dim);
        for (int j = 0; j < c.dim; ++j) {
            Vec img = m.B.diff(n, c.reps[j]);
            Vec cls = page_class_of(m.B, e0b, p, q + 1, img);
            for (int i = 0; i < next->dim; ++i) d0.at(i, j) = cls[i];
        }
        if (!c.F || !next->F) continue;
        Subspace image = Subspace::full(c.dim).image(d0);
        for (int s = next->F->lo; s <= next->F->hi + 1; ++s) {
            Subspace lhs = image.intersect(next->F->at(s));
            Subspace rhs = c.F->at(s).image(d0);
            if (!(lhs == rhs)) {
                ax2 = false;
                if (wit2.empty()) wit2 = cell_str(p, q) + " F^" + std::to_string(s);
                break;
            }
        }
    }
    rep.add("axiom 2: d0 strict with F on E0(B)", ax2, wit2);

    // axiom 3: F induces a weight-q Hodge structure on E1^{p,q}(B),
    // checked through the real structure of E1(A) wherever iota* is defined.
    bool ax3 = true;
    std::string wit3;
    for (auto& [pq, cb] : eb.cells) {
        if (!cb.F) continue;
        auto it = iota_star.find(pq);
        if (it == iota_star.end()) continue;  // axiom 1 already flagged
        // Transport F to the A-side cell coordinates (which carry the real
        // structure): F_A^s = (iota*)^{-1} F_B^s.
        Mat inv(it->second.cols, it->second.rows);
        {
            // invert the square iota* matrix by solving
            Mat id = Mat::identity(it->second.rows);
            for (int col = 0; col < id.cols; ++col) {
                auto x = solve(it->second, id.row(col));
                if (!x) throw invariant_error("check_mhd: iota* not invertible after rank check");
                for (int r = 0; r < inv.rows; ++r) inv.at(r, col) = (*x)[r];
            }
        }
        std::map<int, Subspace> lv;
        for (int s = cb.F->lo; s <= cb.F->hi + 1; ++s) lv[s] = cb.F->at(s).image(inv);
        DecFiltration fa = DecFiltration::from_levels(cb.dim, lv);
        Report hs = check_hodge_structure(cb.dim, pq.second, fa);
        if (!hs.pass()) {
            ax3 = false;
            if (wit3.empty()) wit3 = cell_str(pq.first, pq.second);
        }
    }
    rep.add("axiom 3: weight-q HS on E1(B)", ax3, wit3);
    return rep;
}

Mhs induced_mhs_on_cohomology(const MixedHodgeDiagram& m, int r) {
    Report gate = check_mhd(m);
    if (!gate.pass()) throw input_error("induced_mhs: diagram fails the axioms");

    CohomologyData ha = cohomology(m.A, r);
    CohomologyData hac = cohomology(m.A_c, r);
    CohomologyData hb = cohomology(m.B, r);
    if (ha.dim != hb.dim || hac.dim != ha.dim)
        throw invariant_error("induced_mhs: cohomology ranks disagree across the diagram");

    Mhs out;
    out.dim = ha.dim;

    // Weight filtration: images of the shifted levels W'_i = W_{i-r} in H^r(A).
    IncFiltration wr = m.A.W ? (*m.A.W)[r] : IncFiltration::trivial(m.A.dim(r), 0);
    std::map<int, Subspace> wl;
    for (int i = wr.lo - 1 + r; i <= wr.hi + r; ++i) {
        Subspace cut = wr.at(i - r).intersect(ha.cocycles);
        std::vector<Vec> rows;
        for (int t = 0; t < cut.basis.rows; ++t) rows.push_back(ha.class_of(cut.basis.row(t)));
        wl[i] = Subspace::span(ha.dim, rows);
    }
    if (wl.empty()) wl[0] = Subspace::full(ha.dim);
    out.W = IncFiltration::from_levels(ha.dim, wl);

    // iota* on H^r as a matrix in class coordinates.
    DgaMorphism io = m.iota();
    Mat ios(hb.dim, hac.dim);
    for (int j = 0; j < hac.dim; ++j) {
        Vec cls = hb.class_of(io.apply(r, hac.reps[j]));
        for (int i = 0; i < hb.dim; ++i) ios.at(i, j) = cls[i];
    }
    if (rank_of(ios) != hac.dim) throw invariant_error("induced_mhs: iota* not invertible on H^r");
    Mat inv(hac.dim, hb.dim);
    Mat id = Mat::identity(hb.dim);
    for (int col = 0; col < hb.dim; ++col) {
        auto x = solve(ios, id.row(col));
        for (int t = 0; t < hac.dim; ++t) inv.at(t, col) = (*x)[t];
    }

    // A and A_c have identical canonical class charts, so F transports to the
    // real coordinate system directly.
    DecFiltration fb = m.B.F_at(r);
    std::map<int, Subspace> fl;
    for (int s = fb.lo; s <= fb.hi + 1; ++s) {
        Subspace cut = fb.at(s).intersect(hb.cocycles);
        std::vector<Vec> rows;
        for (int t = 0; t < cut.basis.rows; ++t) rows.push_back(hb.class_of(cut.basis.row(t)));
        fl[s] = Subspace::span(hb.dim, rows).image(inv);
    }
    out.F = DecFiltration::from_levels(ha.dim, fl);

    Report mh = check_mhs(out);
    if (!mh.pass()) throw invariant_error("induced_mhs: result fails the mixed Hodge axioms");
    return out;
}

}  // namespace hodgemc
