#pragma once

#include <random>

#include "mhs.hpp"

namespace hodgemc {
struct Dga;
struct DgaMorphism;
struct MixedHodgeDiagram;
}  // namespace hodgemc

#include "dga.hpp"
#include "mhd.hpp"

namespace hodgemc::testing {

// V = Q^2, W_0 = <e>, W_2 = V, F^1 = <f + i e>: the standard non-split
// two-line mixed Hodge structure.
Mhs fix_nonsplit();

// Randomized MHS built from a bigrading: an R-split rational skeleton,
// optionally perturbed by a unipotent weight-lowering rational map. Dims
// bounded by max_dim, weights within [-3, 3].
Mhs random_mhs(std::mt19937_64& rng, int max_dim, bool perturb = true);

// Free graded-commutative fixtures.
Dga fix_torus();                 // Λ(a,b), d = 0, trivial W
Dga fix_heisenberg();            // Λ(x,y,z), dz = x∧y
Dga fix_torus_complex();         // Λ(ζ,ζ̄) over Q(i), bidegrees (1,0),(0,1)

// Real 2-torus diagram: A = Λ(g1,g2), B = Λ(ζ,ζ̄), ι the change of basis.
MixedHodgeDiagram fix_kahler_torus();

// Kähler-style diagram carrying the three-block data: harmonic forms
// g1..g4, a function β with d(d^c β) = g1∧g3 + g2∧g4, and C = <β>.
// A-side basis: deg0 {1, beta}; deg1 {g1..g4, s1 = dβ, s2 = d^c β}.
Dga fix_threeblock_A();
Dga fix_threeblock_B();
MixedHodgeDiagram fix_threeblock_diagram();

// Small acyclic extension of the torus used for strictness mutations and
// gauge tests: adds a function e with de = f, f of bidegree (1,0) on the
// B side.
MixedHodgeDiagram fix_torus_with_function();

}  // namespace hodgemc::testing
