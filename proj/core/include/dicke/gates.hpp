#pragma once

#include <string>
#include <vector>

#include "dicke/state_vector.hpp"

namespace dicke {

enum class GateKind {
    SubspaceNot, // X(i,j): interchange |i> <-> |j>
    SubspaceRot, // R(i,j,theta): R^y(-theta) rotation in span{|i>, |j>}
    Conjugate,   // C: level reversal |j> -> |d-1-j>
};

/// Value-specific control: the gate fires only on basis states whose digit
/// at `pos` equals `value`.
struct Control {
    int pos;
    int value;

    bool operator==(const Control &) const = default;
};

/// Single-target d-level gate with any number of value controls.
struct Gate {
    GateKind kind;
    int level_i = 0; // X, R only; i < j
    int level_j = 0;
    double theta = 0.0; // R only
    int target = 0;
    std::vector<Control> controls;

    bool operator==(const Gate &) const = default;
};

Gate x_gate(int i, int j, int target, std::vector<Control> controls = {});
Gate r_gate(int i, int j, double theta, int target, std::vector<Control> controls = {});
Gate c_gate(int target, std::vector<Control> controls = {});

/// Ordered gate list; gates apply first to last.
struct Circuit {
    int d = 2;
    int n = 1;
    std::vector<Gate> gates;

    bool operator==(const Circuit &) const = default;
};

using DenseMatrix = std::vector<std::vector<double>>;

/// d x d matrix acting as cos/sin rotation on span{|i>,|j>}, identity on the
/// remaining levels: |i> -> cos(t/2)|i> - sin(t/2)|j>,
/// |j> -> sin(t/2)|i> + cos(t/2)|j>. Real orthogonal.
DenseMatrix r_matrix(int d, int i, int j, double theta);

/// Permutation matrix swapping levels i and j; self-inverse.
DenseMatrix x_matrix(int d, int i, int j);

/// Anti-diagonal permutation |j> -> |d-1-j>.
DenseMatrix c_matrix(int d);

/// Apply one gate. Basis states whose control digits do not all match are
/// left bit-exact untouched; on the matching ones the target qudit's
/// d-dimensional sub-block is transformed. The state itself is not modified.
StateVector apply(const StateVector &state, const Gate &gate);

/// Run a circuit left to right.
StateVector run(const StateVector &state, const Circuit &circuit);

/// In-place variants used by the simulator loop.
void apply_in_place(StateVector &state, const Gate &gate);
void run_in_place(StateVector &state, const Circuit &circuit);

/// Circuit interchange format, e.g.
///   {"d":3,"n":2,"gates":[{"kind":"R","i":0,"j":1,"theta":1.5,
///    "target":0,"controls":[[1,2]]}]}
/// Angles carry 17 significant digits; output is byte-deterministic.
std::string circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const std::string &text);

} // namespace dicke
