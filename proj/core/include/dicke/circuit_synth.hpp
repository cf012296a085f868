#pragma once

#include <string>
#include <vector>

#include "dicke/dicke_states.hpp"
#include "dicke/gates.hpp"

namespace dicke {

/// Names one step operator T acting on a width-m subregister: the step index
/// k' in [1, 2sm-1] splits as k' = 2s*ell + i like a DickeSpec.
struct TSpec {
    int s2;
    int m;
    int kprime;

    TSpec(int s2_, int m_, int kprime_);

    int d() const { return s2 + 1; }
    int ell() const { return kprime / s2; }
    int partial_level() const { return kprime - s2 * ell(); }
};

/// Rotation angles theta_1 ... theta_2s of one T operator, each in [0, pi].
/// They satisfy
///   sin(t1/2) ... sin(t_{2s-j}/2) cos(t_{2s+1-j}/2) = c_{m,k',j}
/// for j = 2s ... 0, with theta_{2s+1} := 0.
struct AngleSet {
    std::vector<double> thetas; // thetas[t-1] = theta_t
};

/// Solves the angle conditions sequentially in exact rational arithmetic,
/// peeling one sine factor per step; once the accumulated sine product hits
/// zero the remaining angles are exactly 0.
AngleSet solve_angles(const TSpec &tspec);

/// Circuit topology of a T operator. The interior shape has a head stage on
/// wires {0, ell-1, ell} (one conjugated rotation per level j = 2s ... i+1)
/// and, when i > 0, a tail stage on wires {0, ell, ell+1} (j = i ... 1).
/// Boundary values of ell collapse wires onto each other; the affected
/// control or stage is dropped:
///   EllOne     ell = 1: the head rotation control on wire ell-1 = 0 would
///              sit on the rotation target and is dropped.
///   EllMax     ell = m-1 (i > 0): wire ell+1 does not exist; the tail
///              angles vanish identically and the stage is dropped.
///   EllOneMax  both of the above (m = 2).
///   EllZero    ell = 0: the head stage would target wire 0 itself and is
///              dropped (its coefficients vanish); the tail rotation control
///              on wire ell = 0 is dropped.
enum class TShape { Interior, EllZero, EllOne, EllMax, EllOneMax };

const char *shape_name(TShape shape);
TShape classify_t_shape(const TSpec &tspec);

/// Provenance of one synthesized T operator within a circuit's gate list.
struct TBlock {
    int m;
    int kprime;
    int ell;
    int partial;
    TShape shape;
    std::size_t first_gate;
    std::size_t gate_count;
};

struct SynthesizedCircuit {
    Circuit circuit;
    std::vector<TBlock> blocks;
};

/// Single T operator on an m-qudit register.
SynthesizedCircuit build_T(const TSpec &tspec);

/// W_m: all T_{m,k'} for k' = 1 ... 2sm-1, applied in ascending k' order.
SynthesizedCircuit build_W(int s2, int m);

/// The k-independent preparation operator U_n: subregister products W_m for
/// m = n ... 2, each acting on the top m wires (offset n-m). Applied to any
/// reference state it produces the matching Dicke state.
SynthesizedCircuit build_U(int s2, int n);

/// The k-dependent operator with redundant T factors removed: per m only
/// k' = max(k+2s(m-n), 1) ... min(k, 2sm-1) survives.
SynthesizedCircuit build_U_simplified(const DickeSpec &spec);

/// Number of T operators in build_U_simplified(spec), in closed form.
long long gate_count_N(const DickeSpec &spec);

/// Number of T operators in build_U(s2, n): sum over m of (2sm - 1).
long long full_T_count(int s2, int n);

/// Per-block provenance and gate tallies, one line per T operator.
std::string describe(const SynthesizedCircuit &synth);

} // namespace dicke
