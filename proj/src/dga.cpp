#include "dga.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace hodgemc {

Vec Dga::unit() const {
    Vec u = zero_elt(0);
    u[0] = Scalar::one();
    return u;
}

Vec Dga::wedge(int p, const Vec& x, int q, const Vec& y) const {
    if (p + q > max_degree) return Vec();
    if (static_cast<int>(x.size()) != dim(p) || static_cast<int>(y.size()) != dim(q))
        throw input_error("dga: wedge dimension mismatch");
    return mult[p][q].apply(tensor_vec(x, y));
}

Vec Dga::diff(int p, const Vec& x) const {
    if (p >= max_degree) return zero_elt(p + 1);
    return d[p].apply(x);
}

Vec Dga::dc_diff(int p, const Vec& x) const {
    if (!dc) throw input_error("dga: no second differential");
    if (p >= max_degree) return zero_elt(p + 1);
    return (*dc)[p].apply(x);
}

Subspace Dga::W_at(int deg, int i) const {
    if (deg < 0 || deg > max_degree) return Subspace(0);
    if (!W) return i >= 0 ? Subspace::full(dim(deg)) : Subspace::zero(dim(deg));
    return (*W)[deg].at(i);
}

Subspace Dga::F_level(int deg, int p) const {
    if (!bidegrees) throw input_error("dga: no bidegrees");
    std::vector<Vec> rows;
    for (int i = 0; i < dim(deg); ++i)
        if ((*bidegrees)[deg][i].first >= p) {
            Vec e = zero_elt(deg);
            e[i] = Scalar::one();
            rows.push_back(e);
        }
    return Subspace::span(dim(deg), rows);
}

DecFiltration Dga::F_at(int deg) const {
    if (!bidegrees) throw input_error("dga: no bidegrees");
    int lo = 0, hi = 0;
    for (auto& [p, q] : (*bidegrees)[deg]) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    std::map<int, Subspace> lv;
    for (int p = lo; p <= hi + 1; ++p) lv[p] = F_level(deg, p);
    return DecFiltration::from_levels(dim(deg), lv);
}

namespace {

Mat bidegree_projection(const Dga& a, int deg, int P, int Q) {
    Mat pr(a.dim(deg), a.dim(deg));
    for (int i = 0; i < a.dim(deg); ++i) {
        auto [p, q] = (*a.bidegrees)[deg][i];
        if (p == P && q == Q) pr.at(i, i) = Scalar::one();
    }
    return pr;
}

}  // namespace

Mat Dga::del(int p) const {
    if (!bidegrees) throw input_error("dga: no bidegrees");
    if (p >= max_degree) return Mat(0, dim(p));
    Mat out(dim(p + 1), dim(p));
    for (int j = 0; j < dim(p); ++j) {
        auto [P, Q] = (*bidegrees)[p][j];
        Vec e = zero_elt(p);
        e[j] = Scalar::one();
        Vec proj = bidegree_projection(*this, p + 1, P + 1, Q).apply(d[p].apply(e));
        for (int i = 0; i < dim(p + 1); ++i) out.at(i, j) = proj[i];
    }
    return out;
}

Mat Dga::delbar(int p) const {
    if (!bidegrees) throw input_error("dga: no bidegrees");
    if (p >= max_degree) return Mat(0, dim(p));
    Mat out(dim(p + 1), dim(p));
    for (int j = 0; j < dim(p); ++j) {
        auto [P, Q] = (*bidegrees)[p][j];
        Vec e = zero_elt(p);
        e[j] = Scalar::one();
        Vec proj = bidegree_projection(*this, p + 1, P, Q + 1).apply(d[p].apply(e));
        for (int i = 0; i < dim(p + 1); ++i) out.at(i, j) = proj[i];
    }
    return out;
}

int Dga::index_of(int deg, const std::string& label) const {
    for (int i = 0; i < dim(deg); ++i)
        if (basis[deg][i] == label) return i;
    return -1;
}

int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int triple_index(int n, int i, int j, int k) {
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += (n - a - 1) * (n - a - 2) / 2;
    idx += (j - i - 1) * (n - i - 1) - (j - i - 1) * (j - i) / 2 + (k - j - 1);
    return idx;
}

Dga make_free_dga(const std::vector<FreeGenerator>& gens, const std::vector<Vec>& d_of_gens,
                  int max_degree, bool complex_field, bool with_weights) {
    if (max_degree < 2 || max_degree > 3) throw input_error("free dga: max_degree must be 2 or 3");
    int n = static_cast<int>(gens.size());
    if (static_cast<int>(d_of_gens.size()) != n) throw input_error("free dga: d values size mismatch");
    Dga a;
    a.max_degree = max_degree;
    a.complex_field = complex_field;
    a.basis.resize(max_degree + 1);
    a.basis[0] = {"1"};
    for (auto& g : gens) a.basis[1].push_back(g.name);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.basis[2].push_back(gens[i].name + "^" + gens[j].name);
    if (max_degree >= 3)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    a.basis[3].push_back(gens[i].name + "^" + gens[j].name + "^" + gens[k].name);

    a.mult.assign(max_degree + 1, std::vector<Mat>(max_degree + 1));
    for (int p = 0; p <= max_degree; ++p)
        for (int q = 0; p + q <= max_degree; ++q) a.mult[p][q] = Mat(a.dim(p + q), a.dim(p) * a.dim(q));
    for (int q = 0; q <= max_degree; ++q) {
        Mat& m0q = a.mult[0][q];
        for (int j = 0; j < a.dim(q); ++j) m0q.at(j, j) = Scalar::one();
        Mat& mq0 = a.mult[q][0];
        for (int i = 0; i < a.dim(q); ++i) mq0.at(i, i) = Scalar::one();
    }
    {
        Mat& m = a.mult[1][1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int col = i * n + j;
                if (i < j)
                    m.at(pair_index(n, i, j), col) = Scalar::one();
                else
                    m.at(pair_index(n, j, i), col) = Scalar(-1);
            }
    }
    if (max_degree >= 3 && n >= 3) {
        Mat& m12 = a.mult[1][2];
        Mat& m21 = a.mult[2][1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (i == j || i == k) continue;
                    int pj = pair_index(n, j, k);
                    int x = i, y = j, z = k;
                    int sign = 1;
                    if (x > y) {
                        std::swap(x, y);
                        sign = -sign;
                    }
                    if (y > z) {
                        std::swap(y, z);
                        sign = -sign;
                    }
                    if (x > y) {
                        std::swap(x, y);
                        sign = -sign;
                    }
                    int t = triple_index(n, x, y, z);
                    m12.at(t, i * a.dim(2) + pj) = Scalar(sign);
                    // (x_j ^ x_k) ^ x_i = x_i ^ x_j ^ x_k (moving an odd
                    // generator past an even product changes nothing)
                    m21.at(t, pj * n + i) = Scalar(sign);
                }
    }

    a.d.resize(max_degree + 1);
    a.d[0] = Mat(n, 1);
    a.d[1] = Mat(a.dim(2), n);
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(d_of_gens[g].size()) != a.dim(2))
            throw input_error("free dga: d value has wrong dimension for generator " + gens[g].name);
        for (int r = 0; r < a.dim(2); ++r) a.d[1].at(r, g) = d_of_gens[g][r];
    }
    a.d[2] = Mat(a.dim(3), a.dim(2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec ei = a.zero_elt(1), ej = a.zero_elt(1);
            ei[i] = Scalar::one();
            ej[j] = Scalar::one();
            Vec val = a.wedge(2, d_of_gens[i], 1, ej);
            Vec t2 = a.wedge(1, ei, 2, d_of_gens[j]);
            if (val.empty()) val = a.zero_elt(3);
            if (!t2.empty()) val = vec_sub(val, t2);
            for (int r = 0; r < a.dim(3); ++r) a.d[2].at(r, pair_index(n, i, j)) = val[r];
        }
    if (max_degree >= 3) a.d[3] = Mat(0, a.dim(3));

    auto monomial_weight = [&](int p, int idx) -> int {
        if (p == 0) return 0;
        if (p == 1) return gens[idx].weight;
        if (p == 2) {
            int c = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (c++ == idx) return gens[i].weight + gens[j].weight;
        }
        int c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (c++ == idx) return gens[i].weight + gens[j].weight + gens[k].weight;
        throw invariant_error("free dga: weight index out of range");
    };

    if (with_weights) {
        std::vector<IncFiltration> ws;
        for (int p = 0; p <= max_degree; ++p) {
            std::map<int, Subspace> lv;
            int wmax = 0;
            for (int idx = 0; idx < a.dim(p); ++idx) wmax = std::max(wmax, monomial_weight(p, idx));
            for (int w = -1; w <= wmax; ++w) {
                std::vector<Vec> rows;
                for (int idx = 0; idx < a.dim(p); ++idx)
                    if (monomial_weight(p, idx) <= w) {
                        Vec e = a.zero_elt(p);
                        e[idx] = Scalar::one();
                        rows.push_back(e);
                    }
                lv[w] = Subspace::span(a.dim(p), rows);
            }
            ws.push_back(IncFiltration::from_levels(a.dim(p), lv));
        }
        a.W = std::move(ws);
    }

    bool any_bideg = std::any_of(gens.begin(), gens.end(),
                                 [](const FreeGenerator& g) { return g.bidegree.has_value(); });
    if (any_bideg) {
        for (auto& g : gens)
            if (!g.bidegree) throw input_error("free dga: all or no generators must carry bidegrees");
        std::vector<std::vector<std::pair<int, int>>> bd(max_degree + 1);
        bd[0] = {{0, 0}};
        for (auto& g : gens) bd[1].push_back(*g.bidegree);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bd[2].push_back({gens[i].bidegree->first + gens[j].bidegree->first,
                                 gens[i].bidegree->second + gens[j].bidegree->second});
        if (max_degree >= 3)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        bd[3].push_back({gens[i].bidegree->first + gens[j].bidegree->first +
                                             gens[k].bidegree->first,
                                         gens[i].bidegree->second + gens[j].bidegree->second +
                                             gens[k].bidegree->second});
        a.bidegrees = std::move(bd);
    }
    return a;
}

namespace {

std::string lbl(const Dga& a, int deg, int i) {
    return a.basis[deg][i] + "(" + std::to_string(deg) + ")";
}

}  // namespace

Report validate_dga(const Dga& a) {
    Report rep;
    if (a.dim(0) < 1) {
        rep.add("unit present", false);
        return rep;
    }
    bool shapes = static_cast<int>(a.d.size()) >= a.max_degree;
    for (int p = 0; p < a.max_degree && shapes; ++p)
        if (a.d[p].rows != a.dim(p + 1) || a.d[p].cols != a.dim(p)) shapes = false;
    rep.add("differential shapes", shapes);
    if (!shapes) return rep;

    if (!a.complex_field) {
        bool real = true;
        for (int p = 0; p < a.max_degree; ++p)
            if (!a.d[p].is_real()) real = false;
        for (int p = 0; p <= a.max_degree && real; ++p)
            for (int q = 0; p + q <= a.max_degree; ++q)
                if (!a.mult[p][q].is_real()) real = false;
        rep.add("rational structure constants", real);
    }

    bool unit_ok = true;
    for (int q = 0; q <= a.max_degree && unit_ok; ++q)
        for (int j = 0; j < a.dim(q); ++j) {
            Vec e = a.zero_elt(q);
            e[j] = Scalar::one();
            if (!(a.wedge(0, a.unit(), q, e) == e) || !(a.wedge(q, e, 0, a.unit()) == e)) {
                unit_ok = false;
                break;
            }
        }
    rep.add("unit is identity", unit_ok);

    bool gc = true;
    std::string gc_wit;
    for (int p = 0; p <= a.max_degree && gc; ++p)
        for (int q = p; p + q <= a.max_degree && gc; ++q)
            for (int i = 0; i < a.dim(p) && gc; ++i)
                for (int j = 0; j < a.dim(q); ++j) {
                    Vec ei = a.zero_elt(p), ej = a.zero_elt(q);
                    ei[i] = Scalar::one();
                    ej[j] = Scalar::one();
                    Vec xy = a.wedge(p, ei, q, ej);
                    Vec yx = a.wedge(q, ej, p, ei);
                    Scalar sign = (p * q) % 2 == 0 ? Scalar(1) : Scalar(-1);
                    if (!(xy == vec_scaled(yx, sign))) {
                        gc = false;
                        gc_wit = lbl(a, p, i) + "," + lbl(a, q, j);
                        break;
                    }
                }
    rep.add("graded commutativity", gc, gc_wit);

    bool dd = true;
    for (int p = 0; p + 2 <= a.max_degree; ++p)
        if (!(a.d[p + 1] * a.d[p]).is_zero()) dd = false;
    rep.add("d^2 = 0", dd);

    bool leib = true;
    std::string leib_wit;
    for (int p = 0; p <= a.max_degree && leib; ++p)
        for (int q = 0; p + q + 1 <= a.max_degree && leib; ++q)
            for (int i = 0; i < a.dim(p) && leib; ++i)
                for (int j = 0; j < a.dim(q); ++j) {
                    Vec ei = a.zero_elt(p), ej = a.zero_elt(q);
                    ei[i] = Scalar::one();
                    ej[j] = Scalar::one();
                    Vec lhs = a.diff(p + q, a.wedge(p, ei, q, ej));
                    Vec rhs = a.wedge(p + 1, a.diff(p, ei), q, ej);
                    Vec t2 = a.wedge(p, ei, q + 1, a.diff(q, ej));
                    rhs = vec_add(rhs, p % 2 == 0 ? t2 : vec_scaled(t2, Scalar(-1)));
                    if (!(lhs == rhs)) {
                        leib = false;
                        leib_wit = lbl(a, p, i) + "," + lbl(a, q, j);
                        break;
                    }
                }
    rep.add("Leibniz", leib, leib_wit);

    bool assoc = true;
    for (int p = 0; p <= a.max_degree && assoc; ++p)
        for (int q = 0; p + q <= a.max_degree && assoc; ++q)
            for (int r = 0; p + q + r <= a.max_degree && assoc; ++r)
                for (int i = 0; i < a.dim(p) && assoc; ++i)
                    for (int j = 0; j < a.dim(q) && assoc; ++j)
                        for (int k = 0; k < a.dim(r); ++k) {
                            Vec ei = a.zero_elt(p), ej = a.zero_elt(q), ek = a.zero_elt(r);
                            ei[i] = Scalar::one();
                            ej[j] = Scalar::one();
                            ek[k] = Scalar::one();
                            Vec l = a.wedge(p + q, a.wedge(p, ei, q, ej), r, ek);
                            Vec rgt = a.wedge(p, ei, q + r, a.wedge(q, ej, r, ek));
                            if (!(l == rgt)) {
                                assoc = false;
                                break;
                            }
                        }
    rep.add("associativity", assoc);

    if (a.W) {
        bool wshape = static_cast<int>(a.W->size()) == a.max_degree + 1;
        rep.add("W shape", wshape);
        if (wshape) {
            if (!a.complex_field) {
                bool wreal = true;
                for (auto& f : *a.W)
                    if (!f.is_real()) wreal = false;
                rep.add("W rational", wreal);
            }
            bool wd = true;
            for (int p = 0; p < a.max_degree && wd; ++p) {
                const IncFiltration& wp = (*a.W)[p];
                for (int i = wp.lo; i <= wp.hi; ++i)
                    if (!a.W_at(p + 1, i).contains(wp.at(i).image(a.d[p]))) {
                        wd = false;
                        break;
                    }
            }
            rep.add("d preserves W", wd);
            bool wm = true;
            for (int p = 0; p <= a.max_degree && wm; ++p)
                for (int q = 0; p + q <= a.max_degree && wm; ++q) {
                    const IncFiltration& wp = (*a.W)[p];
                    const IncFiltration& wq = (*a.W)[q];
                    for (int i = wp.lo; i <= wp.hi && wm; ++i)
                        for (int j = wq.lo; j <= wq.hi; ++j) {
                            Subspace img = Subspace::zero(a.dim(p + q));
                            for (int r = 0; r < wp.at(i).basis.rows; ++r)
                                for (int s = 0; s < wq.at(j).basis.rows; ++s) {
                                    Vec w = a.wedge(p, wp.at(i).basis.row(r), q, wq.at(j).basis.row(s));
                                    if (!w.empty()) img = img.sum(Subspace::span(a.dim(p + q), {w}));
                                }
                            if (!a.W_at(p + q, i + j).contains(img)) {
                                wm = false;
                                break;
                            }
                        }
                }
            rep.add("wedge preserves W", wm);
        }
    }

    if (a.bidegrees) {
        bool bshape = static_cast<int>(a.bidegrees->size()) == a.max_degree + 1;
        for (int p = 0; p <= a.max_degree && bshape; ++p)
            if (static_cast<int>((*a.bidegrees)[p].size()) != a.dim(p)) bshape = false;
        rep.add("bidegree shape", bshape);
        if (bshape) {
            bool degsum = true;
            for (int p = 0; p <= a.max_degree && degsum; ++p)
                for (int i = 0; i < a.dim(p); ++i) {
                    auto [P, Q] = (*a.bidegrees)[p][i];
                    if (P + Q != p) {
                        degsum = false;
                        break;
                    }
                }
            rep.add("bidegrees sum to degree", degsum);
            if (degsum) {
                bool split = true;
                for (int p = 0; p < a.max_degree && split; ++p)
                    if (!(a.d[p] == a.del(p) + a.delbar(p))) split = false;
                rep.add("d = del + delbar", split);
            }
        }
    }

    if (a.dc) {
        bool shape_ok = static_cast<int>(a.dc->size()) >= a.max_degree;
        for (int p = 0; p < a.max_degree && shape_ok; ++p)
            if ((*a.dc)[p].rows != a.dim(p + 1) || (*a.dc)[p].cols != a.dim(p)) shape_ok = false;
        rep.add("dc shapes", shape_ok);
        if (shape_ok) {
            bool dc2 = true;
            for (int p = 0; p + 2 <= a.max_degree; ++p)
                if (!((*a.dc)[p + 1] * (*a.dc)[p]).is_zero()) dc2 = false;
            rep.add("dc^2 = 0", dc2);
            bool anti = true;
            for (int p = 0; p + 2 <= a.max_degree; ++p)
                if (!(a.d[p + 1] * (*a.dc)[p] + (*a.dc)[p + 1] * a.d[p]).is_zero()) anti = false;
            rep.add("d dc = -dc d", anti);
            bool dcl = true;
            for (int p = 0; p <= a.max_degree && dcl; ++p)
                for (int q = 0; p + q + 1 <= a.max_degree && dcl; ++q)
                    for (int i = 0; i < a.dim(p) && dcl; ++i)
                        for (int j = 0; j < a.dim(q); ++j) {
                            Vec ei = a.zero_elt(p), ej = a.zero_elt(q);
                            ei[i] = Scalar::one();
                            ej[j] = Scalar::one();
                            Vec lhs = a.dc_diff(p + q, a.wedge(p, ei, q, ej));
                            Vec rhs = a.wedge(p + 1, a.dc_diff(p, ei), q, ej);
                            Vec t2 = a.wedge(p, ei, q + 1, a.dc_diff(q, ej));
                            rhs = vec_add(rhs, p % 2 == 0 ? t2 : vec_scaled(t2, Scalar(-1)));
                            if (!(lhs == rhs)) {
                                dcl = false;
                                break;
                            }
                        }
            rep.add("dc Leibniz", dcl);
        }
    }

    Subspace z0 = Subspace::span_mat(kernel(a.d[0]));
    rep.add("cohomologically connected", z0.dim() == 1 && z0.contains(a.unit()));
    return rep;
}

CohomologyData cohomology(const Dga& a, int n) {
    if (n < 0 || n > a.max_degree) throw input_error("cohomology: degree out of range");
    CohomologyData c;
    c.degree = n;
    c.cocycles = n == a.max_degree ? Subspace::full(a.dim(n)) : Subspace::span_mat(kernel(a.d[n]));
    if (n == 0) {
        c.coboundaries = Subspace::zero(a.dim(0));
    } else {
        std::vector<Vec> rows;
        for (int j = 0; j < a.dim(n - 1); ++j) {
            Vec e = a.zero_elt(n - 1);
            e[j] = Scalar::one();
            rows.push_back(a.diff(n - 1, e));
        }
        c.coboundaries = Subspace::span(a.dim(n), rows);
    }
    Mat bz = coordinates_in(c.cocycles, c.coboundaries.basis);
    c.quot = Quotient(Subspace::span_mat(bz));
    c.dim = c.quot.dim();
    for (int i = 0; i < c.dim; ++i) {
        Vec q = vec_zero(c.dim);
        q[i] = Scalar::one();
        Vec zc = c.quot.lift(q);
        Vec amb = vec_zero(c.cocycles.ambient);
        for (int r = 0; r < c.cocycles.basis.rows; ++r)
            if (!zc[r].is_zero()) amb = vec_add(amb, vec_scaled(c.cocycles.basis.row(r), zc[r]));
        c.reps.push_back(amb);
    }
    return c;
}

Vec CohomologyData::class_of(const Vec& v) const {
    auto coords = cocycles.coordinates(v);
    if (!coords) throw input_error("cohomology: element is not a cocycle");
    return quot.project(*coords);
}

Report validate_morphism(const DgaMorphism& f, bool check_filtrations) {
    Report rep;
    const Dga& A = *f.source;
    const Dga& B = *f.target;
    bool shape = static_cast<int>(f.maps.size()) == A.max_degree + 1 && A.max_degree == B.max_degree;
    for (int p = 0; p <= A.max_degree && shape; ++p)
        if (f.maps[p].rows != B.dim(p) || f.maps[p].cols != A.dim(p)) shape = false;
    rep.add("shapes", shape);
    if (!shape) return rep;
    rep.add("unit", f.apply(0, A.unit()) == B.unit());
    bool chain = true;
    for (int p = 0; p < A.max_degree; ++p)
        if (!(f.maps[p + 1] * A.d[p] == B.d[p] * f.maps[p])) chain = false;
    rep.add("chain map", chain);
    bool multip = true;
    for (int p = 0; p <= A.max_degree && multip; ++p)
        for (int q = 0; p + q <= A.max_degree && multip; ++q)
            for (int i = 0; i < A.dim(p) && multip; ++i)
                for (int j = 0; j < A.dim(q); ++j) {
                    Vec ei = A.zero_elt(p), ej = A.zero_elt(q);
                    ei[i] = Scalar::one();
                    ej[j] = Scalar::one();
                    Vec lhs = f.apply(p + q, A.wedge(p, ei, q, ej));
                    Vec rhs = B.wedge(p, f.apply(p, ei), q, f.apply(q, ej));
                    if (!(lhs == rhs)) {
                        multip = false;
                        break;
                    }
                }
    rep.add("multiplicative", multip);
    if (check_filtrations && A.W && B.W) {
        bool wc = true;
        for (int p = 0; p <= A.max_degree && wc; ++p) {
            const IncFiltration& wp = (*A.W)[p];
            for (int i = wp.lo; i <= wp.hi; ++i)
                if (!B.W_at(p, i).contains(wp.at(i).image(f.maps[p]))) {
                    wc = false;
                    break;
                }
        }
        rep.add("W compatible", wc);
    }
    return rep;
}

OneQisReport check_morphism_1qis(const DgaMorphism& f) {
    OneQisReport out;
    auto induced = [&](int n, bool& iso, bool& inj) {
        CohomologyData hs = cohomology(*f.source, n);
        CohomologyData ht = cohomology(*f.target, n);
        Mat m(ht.dim, hs.dim);
        for (int j = 0; j < hs.dim; ++j) {
            Vec cls = ht.class_of(f.apply(n, hs.reps[j]));
            for (int i = 0; i < ht.dim; ++i) m.at(i, j) = cls[i];
        }
        int r = rank_of(m);
        inj = r == hs.dim;
        iso = inj && r == ht.dim;
    };
    bool inj0 = false, inj1 = false, iso2 = false;
    induced(0, out.h0_iso, inj0);
    induced(1, out.h1_iso, inj1);
    induced(2, iso2, out.h2_inj);
    return out;
}

Dga complexify(const Dga& a) {
    Dga b = a;
    b.complex_field = true;
    return b;
}

std::pair<Dga, Report> dec_shift(const Dga& a) {
    if (!a.W) throw input_error("dec_shift: no weight filtration");
    Dga b = a;
    std::vector<IncFiltration> shifted;
    for (int r = 0; r <= a.max_degree; ++r) {
        const IncFiltration& w = (*a.W)[r];
        IncFiltration s;
        s.ambient = w.ambient;
        s.lo = w.lo + r;
        s.hi = w.hi + r;
        for (int i = s.lo; i <= s.hi; ++i) s.levels[i] = w.at(i - r);
        shifted.push_back(s);
    }
    b.W = std::move(shifted);
    Report rep;
    bool wm = true;
    for (int p = 0; p <= a.max_degree && wm; ++p)
        for (int q = 0; p + q <= a.max_degree && wm; ++q) {
            const IncFiltration& wp = (*b.W)[p];
            const IncFiltration& wq = (*b.W)[q];
            for (int i = wp.lo; i <= wp.hi && wm; ++i)
                for (int j = wq.lo; j <= wq.hi; ++j) {
                    Subspace img = Subspace::zero(b.dim(p + q));
                    for (int r = 0; r < wp.at(i).basis.rows; ++r)
                        for (int s = 0; s < wq.at(j).basis.rows; ++s) {
                            Vec w = b.wedge(p, wp.at(i).basis.row(r), q, wq.at(j).basis.row(s));
                            if (!w.empty()) img = img.sum(Subspace::span(b.dim(p + q), {w}));
                        }
                    if (!b.W_at(p + q, i + j).contains(img)) {
                        wm = false;
                        break;
                    }
                }
        }
    rep.add("wedge preserves shifted W", wm);
    if (!wm) throw invariant_error("dec_shift: multiplication incompatible with shifted filtration");
    bool wd = true;
    for (int p = 0; p < b.max_degree && wd; ++p) {
        const IncFiltration& wp = (*b.W)[p];
        for (int i = wp.lo; i <= wp.hi; ++i)
            if (!b.W_at(p + 1, i).contains(wp.at(i).image(b.d[p]))) {
                wd = false;
                break;
            }
    }
    rep.add("d preserves shifted W", wd);
    return {b, rep};
}

}  // namespace hodgemc
