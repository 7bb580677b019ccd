#include "fixtures.hpp"

#include "errors.hpp"
#include "rng.hpp"

namespace hodgemc::testing {

namespace {

Scalar I() { return Scalar::imaginary_unit(); }
Scalar half() { return Scalar::of(1, 2); }

Vec ei(int n, int i) {
    Vec v(n);
    v[i] = Scalar::one();
    return v;
}

}  // namespace

Mhs fix_nonsplit() {
    Mhs m;
    m.dim = 2;
    std::map<int, Subspace> wl;
    wl[0] = Subspace::span(2, {ei(2, 0)});
    wl[1] = wl[0];
    wl[2] = Subspace::full(2);
    m.W = IncFiltration::from_levels(2, wl);
    std::map<int, Subspace> fl;
    fl[0] = Subspace::full(2);
    fl[1] = Subspace::span(2, {{I(), Scalar(1)}});  // <f + i e>
    fl[2] = Subspace::zero(2);
    m.F = DecFiltration::from_levels(2, fl);
    return m;
}

Mhs random_mhs(std::mt19937_64& rng, int max_dim, bool perturb) {
    // Component plan: pick weights in [-3,3]; for p=q put real lines, for
    // p<q pair (e_a + i e_b, e_a - i e_b).
    int dim = rand_int(rng, 1, std::max(1, max_dim));
    Bigrading b;
    b.dim = dim;
    int next = 0;
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> plan;
    while (next < dim) {
        int w = rand_int(rng, -3, 3);
        int p = rand_int(rng, w - 2, w + 2);
        int q = w - p;
        if (p == q) {
            plan.push_back({{p, q}, {next}});
            next += 1;
        } else if (next + 1 < dim) {
            if (p > q) std::swap(p, q);
            plan.push_back({{p, q}, {next, next + 1}});
            next += 2;
        } else {
            plan.push_back({{w, w}, {next}});
            next += 1;
        }
    }
    std::map<std::pair<int, int>, std::vector<Vec>> comps;
    for (auto& [pq, idxs] : plan) {
        if (idxs.size() == 1) {
            comps[pq].push_back(ei(dim, idxs[0]));
        } else {
            Vec plus = ei(dim, idxs[0]);
            plus[idxs[1]] = I();
            Vec minus = ei(dim, idxs[0]);
            minus[idxs[1]] = -I();
            comps[pq].push_back(plus);
            comps[{pq.second, pq.first}].push_back(minus);
        }
    }
    // Optional non-split perturbation: a rational strictly-weight-lowering
    // unipotent applied to every component. It preserves the direct sum, the
    // W levels, and the conjugation symmetry mod lower weight.
    Mat X(dim, dim);
    if (perturb) {
        auto weight_of_index = [&](int idx) {
            for (auto& [pq, idxs] : plan)
                for (size_t k = 0; k < idxs.size(); ++k)
                    if (idxs[k] == idx) return pq.first + pq.second;
            return 0;
        };
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (weight_of_index(r) < weight_of_index(c) && rand_int(rng, 0, 2) == 0)
                    X.at(r, c) = rand_rational(rng, 2);
    }
    Mat U = Mat::identity(dim) + X;
    for (auto& [pq, rows] : comps) {
        std::vector<Vec> moved;
        for (auto& v : rows) moved.push_back(U.apply(v));
        b.comps[pq] = Subspace::span(dim, moved);
    }
    return mhs_from_bigrading(b);
}

Dga fix_torus() {
    std::vector<FreeGenerator> gens = {{"a", 1, std::nullopt}, {"b", 1, std::nullopt}};
    std::vector<Vec> dg = {vec_zero(1), vec_zero(1)};
    Dga a = make_free_dga(gens, dg, 3, false, false);
    std::vector<IncFiltration> ws;
    for (int p = 0; p <= 3; ++p) ws.push_back(IncFiltration::trivial(a.dim(p), 0));
    a.W = ws;
    return a;
}

Dga fix_heisenberg() {
    std::vector<FreeGenerator> gens = {{"x", 1, std::nullopt}, {"y", 1, std::nullopt}, {"z", 1, std::nullopt}};
    // d z = x ^ y  (pair basis: x^y, x^z, y^z)
    Vec dz = vec_zero(3);
    dz[0] = Scalar::one();
    std::vector<Vec> dg = {vec_zero(3), vec_zero(3), dz};
    return make_free_dga(gens, dg, 3, false, false);
}

Dga fix_torus_complex() {
    std::vector<FreeGenerator> gens = {{"zeta", 1, std::make_pair(1, 0)},
                                       {"zetabar", 1, std::make_pair(0, 1)}};
    std::vector<Vec> dg = {vec_zero(1), vec_zero(1)};
    Dga b = make_free_dga(gens, dg, 3, true, false);
    std::vector<IncFiltration> ws;
    for (int p = 0; p <= 3; ++p) ws.push_back(IncFiltration::trivial(b.dim(p), 0));
    b.W = ws;
    return b;
}

MixedHodgeDiagram fix_kahler_torus() {
    MixedHodgeDiagram m;
    m.A = fix_torus();
    m.B = fix_torus_complex();
    m.refresh();
    // iota(g1) = zeta + zetabar, iota(g2) = -i zeta + i zetabar, so
    // zeta = iota((g1 + i g2)/2).
    Mat m0 = Mat::identity(1);
    Mat m1(2, 2);
    m1.at(0, 0) = Scalar(1);
    m1.at(1, 0) = Scalar(1);
    m1.at(0, 1) = -I();
    m1.at(1, 1) = I();
    // degree 2: a^b -> iota(a)^iota(b) = (z+zb)^(-iz+izb) = 2i z^zb
    Mat m2(1, 1);
    m2.at(0, 0) = Scalar(2) * I();
    Mat m3(0, 0);
    m.iota_maps = {m0, m1, m2, m3};
    return m;
}

// The three-block instance models a slice of the de Rham algebra of a
// genus-2 curve: degree 3 is empty, which keeps every truncated product
// (beta- and s-multiples) consistent with Leibniz.
Dga fix_threeblock_A() {
    Dga a;
    a.max_degree = 3;
    a.complex_field = false;
    a.basis = {{"1", "beta"},
               {"g1", "g2", "g3", "g4", "s1", "s2"},
               {"g1^g2", "g1^g3", "g1^g4", "g2^g3", "g2^g4", "g3^g4"},
               {}};
    const int n1 = 6, n2 = 6;
    a.mult.assign(4, std::vector<Mat>(4));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) a.mult[p][q] = Mat(a.dim(p + q), a.dim(p) * a.dim(q));
    // unit products
    for (int q = 0; q <= 3; ++q) {
        for (int j = 0; j < a.dim(q); ++j) a.mult[0][q].at(j, 0 * a.dim(q) + j) = Scalar::one();
        for (int i = 0; i < a.dim(q); ++i) a.mult[q][0].at(i, i * a.dim(0) + 0) = Scalar::one();
    }
    // beta and the s-forms multiply to zero against positive degrees;
    // harmonic wedges g_i ^ g_j span degree 2.
    auto pidx = [&](int i, int j) { return pair_index(4, i, j); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            int col = i * n1 + j;
            if (i < j)
                a.mult[1][1].at(pidx(i, j), col) = Scalar::one();
            else
                a.mult[1][1].at(pidx(j, i), col) = Scalar(-1);
        }
    // d: d(beta) = s1; d(s2) = g1^g3 + g2^g4; everything else closed.
    a.d.resize(4);
    a.d[0] = Mat(n1, 2);
    a.d[0].at(4, 1) = Scalar::one();
    a.d[1] = Mat(n2, n1);
    a.d[1].at(pidx(0, 2), 5) = Scalar::one();
    a.d[1].at(pidx(1, 3), 5) = Scalar::one();
    a.d[2] = Mat(0, n2);
    a.d[3] = Mat(0, 0);
    // dc: dc(beta) = s2; dc(s1) = -(g1^g3 + g2^g4); dc(s2) = 0; dc(g) = 0.
    std::vector<Mat> dc(4);
    dc[0] = Mat(n1, 2);
    dc[0].at(5, 1) = Scalar::one();
    dc[1] = Mat(n2, n1);
    dc[1].at(pidx(0, 2), 4) = Scalar(-1);
    dc[1].at(pidx(1, 3), 4) = Scalar(-1);
    dc[2] = Mat(0, n2);
    dc[3] = Mat(0, 0);
    a.dc = std::move(dc);
    std::vector<IncFiltration> ws;
    for (int p = 0; p <= 3; ++p) ws.push_back(IncFiltration::trivial(a.dim(p), 0));
    a.W = ws;
    return a;
}

Dga fix_threeblock_B() {
    Dga b;
    b.max_degree = 3;
    b.complex_field = true;
    // Basis order matches the real side: z1 = g1 + i g2, z2 = g3 + i g4,
    // p = (s1 + i s2)/2, q = (s1 - i s2)/2.
    b.basis = {{"1", "beta"},
               {"z1", "z2", "zb1", "zb2", "p", "q"},
               {"z1^z2", "z1^zb1", "z1^zb2", "z2^zb1", "z2^zb2", "zb1^zb2"},
               {}};
    const int n1 = 6, n2 = 6;
    b.mult.assign(4, std::vector<Mat>(4));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) b.mult[p][q] = Mat(b.dim(p + q), b.dim(p) * b.dim(q));
    for (int q = 0; q <= 3; ++q) {
        for (int j = 0; j < b.dim(q); ++j) b.mult[0][q].at(j, 0 * b.dim(q) + j) = Scalar::one();
        for (int i = 0; i < b.dim(q); ++i) b.mult[q][0].at(i, i * b.dim(0) + 0) = Scalar::one();
    }
    auto pidx = [&](int i, int j) { return pair_index(4, i, j); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            int col = i * n1 + j;
            if (i < j)
                b.mult[1][1].at(pidx(i, j), col) = Scalar::one();
            else
                b.mult[1][1].at(pidx(j, i), col) = Scalar(-1);
        }
    // d(beta) = p + q; d(p) = (i/4)(z1^zb2 - z2^zb1); d(q) = -d(p).
    b.d.resize(4);
    b.d[0] = Mat(n1, 2);
    b.d[0].at(4, 1) = Scalar::one();
    b.d[0].at(5, 1) = Scalar::one();
    b.d[1] = Mat(n2, n1);
    Scalar quarter_i = I() * Scalar::of(1, 4);
    b.d[1].at(pidx(0, 3), 4) = quarter_i;   // z1^zb2
    b.d[1].at(pidx(1, 2), 4) = -quarter_i;  // z2^zb1
    b.d[1].at(pidx(0, 3), 5) = -quarter_i;
    b.d[1].at(pidx(1, 2), 5) = quarter_i;
    b.d[2] = Mat(0, n2);
    b.d[3] = Mat(0, 0);
    // bidegrees: z1,z2,p: (1,0); zb1,zb2,q: (0,1); pairs additive.
    std::vector<std::vector<std::pair<int, int>>> bd(4);
    bd[0] = {{0, 0}, {0, 0}};
    bd[1] = {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 1}};
    auto bideg1 = [&](int i) { return bd[1][i]; };
    bd[2].resize(n2);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            bd[2][pidx(i, j)] = {bideg1(i).first + bideg1(j).first,
                                 bideg1(i).second + bideg1(j).second};
    bd[3] = {};
    b.bidegrees = std::move(bd);
    std::vector<IncFiltration> ws;
    for (int p = 0; p <= 3; ++p) ws.push_back(IncFiltration::trivial(b.dim(p), 0));
    b.W = ws;
    return b;
}

MixedHodgeDiagram fix_threeblock_diagram() {
    MixedHodgeDiagram m;
    m.A = fix_threeblock_A();
    m.B = fix_threeblock_B();
    m.refresh();
    // iota identifies: g1 = (z1+zb1)/2 ... i.e. z1 = iota(g1 + i g2),
    // coordinates: iota(g1) = (z1+zb1)/2, iota(g2) = (-i z1 + i zb1)/2,
    // iota(g3) = (z2+zb2)/2, iota(g4) = (-i z2 + i zb2)/2,
    // iota(s1) = p + q, iota(s2) = -i p + i q, iota(beta) = beta.
    Mat m0 = Mat::identity(2);
    Mat m1(6, 6);
    auto set1 = [&](int row, int col, Scalar v) { m1.at(row, col) = v; };
    set1(0, 0, half());
    set1(2, 0, half());
    set1(0, 1, -I() * half());
    set1(2, 1, I() * half());
    set1(1, 2, half());
    set1(3, 2, half());
    set1(1, 3, -I() * half());
    set1(3, 3, I() * half());
    set1(4, 4, Scalar(1));
    set1(5, 4, Scalar(1));
    set1(4, 5, -I());
    set1(5, 5, I());
    // degree 2 and 3 by multiplicativity of the degree-1 block.
    const Dga& A = m.A;
    const Dga& B = m.B;
    Mat m2(B.dim(2), A.dim(2));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vec fi = m1.apply([&] {
                Vec e = A.zero_elt(1);
                e[i] = Scalar::one();
                return e;
            }());
            Vec fj = m1.apply([&] {
                Vec e = A.zero_elt(1);
                e[j] = Scalar::one();
                return e;
            }());
            Vec w = B.wedge(1, fi, 1, fj);
            for (int r = 0; r < B.dim(2); ++r) m2.at(r, pair_index(4, i, j)) = w[r];
        }
    Mat m3(B.dim(3), A.dim(3));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                Vec fi = m1.apply([&] {
                    Vec e = A.zero_elt(1);
                    e[i] = Scalar::one();
                    return e;
                }());
                Vec fj = m1.apply([&] {
                    Vec e = A.zero_elt(1);
                    e[j] = Scalar::one();
                    return e;
                }());
                Vec fk = m1.apply([&] {
                    Vec e = A.zero_elt(1);
                    e[k] = Scalar::one();
                    return e;
                }());
                Vec w = B.wedge(2, B.wedge(1, fi, 1, fj), 1, fk);
                for (int r = 0; r < B.dim(3); ++r) m3.at(r, triple_index(4, i, j, k)) = w[r];
            }
    m.iota_maps = {m0, m1, m2, m3};
    return m;
}

MixedHodgeDiagram fix_torus_with_function() {
    // A: Λ(g1, g2) plus functions {1, e} with de = f where the B-side f is
    // declared of bidegree (1,0); breaks F-strictness of d0 on E0(B) while
    // keeping the E1 comparison intact.
    MixedHodgeDiagram m;
    auto build = [&](bool complex_side) {
        Dga a;
        a.max_degree = 3;
        a.complex_field = complex_side;
        // f = de multiplies to zero against everything, so degree 2 is the
        // torus line and degree 3 is empty: Leibniz stays consistent.
        if (complex_side)
            a.basis = {{"1", "e"}, {"zeta", "zetabar", "f"}, {"zeta^zetabar"}, {}};
        else
            a.basis = {{"1", "e"}, {"g1", "g2", "f"}, {"g1^g2"}, {}};
        a.mult.assign(4, std::vector<Mat>(4));
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; p + q <= 3; ++q) a.mult[p][q] = Mat(a.dim(p + q), a.dim(p) * a.dim(q));
        for (int q = 0; q <= 3; ++q) {
            for (int j = 0; j < a.dim(q); ++j) a.mult[0][q].at(j, 0 * a.dim(q) + j) = Scalar::one();
            for (int i = 0; i < a.dim(q); ++i) a.mult[q][0].at(i, i * a.dim(0) + 0) = Scalar::one();
        }
        a.mult[1][1].at(0, 0 * 3 + 1) = Scalar::one();
        a.mult[1][1].at(0, 1 * 3 + 0) = Scalar(-1);
        a.d.resize(4);
        a.d[0] = Mat(3, 2);
        a.d[0].at(2, 1) = Scalar::one();  // de = f
        a.d[1] = Mat(1, 3);
        a.d[2] = Mat(0, 1);
        a.d[3] = Mat(0, 0);
        std::vector<IncFiltration> ws;
        for (int p = 0; p <= 3; ++p) ws.push_back(IncFiltration::trivial(a.dim(p), 0));
        a.W = ws;
        if (complex_side) {
            std::vector<std::vector<std::pair<int, int>>> bd(4);
            bd[0] = {{0, 0}, {0, 0}};
            bd[1] = {{1, 0}, {0, 1}, {1, 0}};
            bd[2] = {{1, 1}};
            bd[3] = {};
            a.bidegrees = std::move(bd);
        }
        return a;
    };
    m.A = build(false);
    m.B = build(true);
    m.refresh();
    Mat m0 = Mat::identity(2);
    Mat m1(3, 3);
    m1.at(0, 0) = Scalar(1);
    m1.at(1, 0) = Scalar(1);
    m1.at(0, 1) = -I();
    m1.at(1, 1) = I();
    m1.at(2, 2) = Scalar(1);
    Mat m2(1, 1);
    m2.at(0, 0) = Scalar(2) * I();  // g1^g2 -> 2i zeta^zetabar
    Mat m3(0, 0);
    m.iota_maps = {m0, m1, m2, m3};
    return m;
}

}  // namespace hodgemc::testing
