#include "dicke/circuit_synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dicke {

TSpec::TSpec(int s2_, int m_, int kprime_) : s2(s2_), m(m_), kprime(kprime_) {
    if (s2 < 1) {
        throw InvalidSpec("TSpec: 2s must be >= 1");
    }
    if (m < 2) {
        throw InvalidSpec("TSpec: subcircuit width m must be >= 2");
    }
    if (kprime < 1 || kprime > s2 * m - 1) {
        throw InvalidSpec("TSpec: k' must lie in [1, 2sm-1]");
    }
}

AngleSet solve_angles(const TSpec &tspec) {
    const int s2 = tspec.s2;
    const DickeSpec coeff_spec(s2, tspec.m, tspec.kprime);

    AngleSet angles;
    angles.thetas.assign(static_cast<std::size_t>(s2), 0.0);

    // Invariant: rem2 = 1 - sum of c_j^2 already consumed
    //          = (product of peeled sin^2 factors), exactly.
    BigRational rem2 = 1;
    for (int t = 1; t <= s2; ++t) {
        const int j = s2 + 1 - t;
        const BigRational c2 = coeff_c_squared(coeff_spec, j);
        if (rem2 == 0) {
            if (c2 != 0) {
                throw InconsistentCoefficients("solve_angles: nonzero coefficient after sine product vanished");
            }
            continue; // theta_t stays 0
        }
        const BigRational cos2 = c2 / rem2;
        const BigRational sin2 = 1 - cos2;
        if (sin2 < 0) {
            throw InconsistentCoefficients("solve_angles: coefficient squares exceed remaining weight");
        }
        angles.thetas[static_cast<std::size_t>(t - 1)] =
            2.0 * std::atan2(SqrtRational(sin2).to_double(), SqrtRational(cos2).to_double());
        rem2 *= sin2; // equals rem2 - c2 exactly
    }
    if (rem2 != coeff_c_squared(coeff_spec, 0)) {
        throw InconsistentCoefficients("solve_angles: residual sine product does not match c_0");
    }
    return angles;
}

const char *shape_name(TShape shape) {
    switch (shape) {
    case TShape::Interior:
        return "interior";
    case TShape::EllZero:
        return "ell-zero";
    case TShape::EllOne:
        return "ell-one";
    case TShape::EllMax:
        return "ell-max";
    case TShape::EllOneMax:
        return "ell-one-max";
    }
    throw UnsupportedShape("shape_name: unknown shape");
}

TShape classify_t_shape(const TSpec &tspec) {
    const int ell = tspec.ell();
    const int partial = tspec.partial_level();
    if (ell == 0) {
        return TShape::EllZero;
    }
    const bool at_one = (ell == 1);
    const bool at_top = (partial > 0 && ell == tspec.m - 1);
    if (at_one && at_top) {
        return TShape::EllOneMax;
    }
    if (at_top) {
        return TShape::EllMax;
    }
    if (at_one) {
        return TShape::EllOne;
    }
    return TShape::Interior;
}

namespace {

// Appends the gates of T_{m,k'} to out, with subregister wire w mapped to
// circuit wire offset + w.
void append_t(SynthesizedCircuit &out, const TSpec &tspec, int offset) {
    const int s2 = tspec.s2;
    const int ell = tspec.ell();
    const int partial = tspec.partial_level();
    const AngleSet angles = solve_angles(tspec);
    const std::size_t first = out.circuit.gates.size();
    auto &gates = out.circuit.gates;

    // Head stage: peel levels j = 2s ... i+1 off wire 0 into wire ell.
    if (ell >= 1) {
        for (int j = s2; j >= partial + 1; --j) {
            const int x_lo = partial + (s2 - j);
            const double theta = angles.thetas[static_cast<std::size_t>(s2 - j)];
            const Gate conj = x_gate(x_lo, x_lo + 1, offset + ell, {{offset, j}});
            std::vector<Control> rot_controls;
            if (ell >= 2) {
                rot_controls.push_back({offset + ell - 1, s2});
            }
            rot_controls.push_back({offset + ell, x_lo + 1});
            gates.push_back(conj);
            gates.push_back(r_gate(j - 1, j, theta, offset, std::move(rot_controls)));
            gates.push_back(conj);
        }
    }

    // Tail stage (i > 0 only): levels j = i ... 1 spill into wire ell+1,
    // which must exist.
    if (partial >= 1 && ell + 1 <= tspec.m - 1) {
        for (int j = partial; j >= 1; --j) {
            const int x_lo = partial - j;
            const double theta = angles.thetas[static_cast<std::size_t>(s2 - j)];
            const Gate conj = x_gate(x_lo, x_lo + 1, offset + ell + 1, {{offset, j}});
            std::vector<Control> rot_controls;
            if (ell >= 1) {
                rot_controls.push_back({offset + ell, s2});
            }
            rot_controls.push_back({offset + ell + 1, x_lo + 1});
            gates.push_back(conj);
            gates.push_back(r_gate(j - 1, j, theta, offset, std::move(rot_controls)));
            gates.push_back(conj);
        }
    }

    out.blocks.push_back(TBlock{tspec.m, tspec.kprime, ell, partial, classify_t_shape(tspec), first,
                                out.circuit.gates.size() - first});
}

} // namespace

SynthesizedCircuit build_T(const TSpec &tspec) {
    SynthesizedCircuit out;
    out.circuit.d = tspec.d();
    out.circuit.n = tspec.m;
    append_t(out, tspec, 0);
    return out;
}

SynthesizedCircuit build_W(int s2, int m) {
    SynthesizedCircuit out;
    out.circuit.d = s2 + 1;
    out.circuit.n = m;
    for (int kprime = 1; kprime <= s2 * m - 1; ++kprime) {
        append_t(out, TSpec(s2, m, kprime), 0);
    }
    return out;
}

SynthesizedCircuit build_U(int s2, int n) {
    if (s2 < 1 || n < 1) {
        throw InvalidSpec("build_U: need 2s >= 1 and n >= 1");
    }
    SynthesizedCircuit out;
    out.circuit.d = s2 + 1;
    out.circuit.n = n;
    // The width-m factor acts on the top m wires; wider factors apply first.
    for (int m = n; m >= 2; --m) {
        const int offset = n - m;
        for (int kprime = 1; kprime <= s2 * m - 1; ++kprime) {
            append_t(out, TSpec(s2, m, kprime), offset);
        }
    }
    return out;
}

SynthesizedCircuit build_U_simplified(const DickeSpec &spec) {
    SynthesizedCircuit out;
    out.circuit.d = spec.d();
    out.circuit.n = spec.n;
    for (int m = spec.n; m >= 2; --m) {
        const int offset = spec.n - m;
        const int lo = std::max(spec.k + spec.s2 * (m - spec.n), 1);
        const int hi = std::min(spec.k, spec.s2 * m - 1);
        for (int kprime = lo; kprime <= hi; ++kprime) {
            append_t(out, TSpec(spec.s2, m, kprime), offset);
        }
    }
    return out;
}

long long gate_count_N(const DickeSpec &spec) {
    long long total = 0;
    for (int m = 2; m <= spec.n; ++m) {
        const long long lo = std::max(spec.k + spec.s2 * (m - spec.n), 1);
        const long long hi = std::min<long long>(spec.k, spec.s2 * m - 1);
        total += std::max<long long>(0, 1 + hi - lo);
    }
    return total;
}

long long full_T_count(int s2, int n) {
    long long total = 0;
    for (int m = 2; m <= n; ++m) {
        total += static_cast<long long>(s2) * m - 1;
    }
    return total;
}

std::string describe(const SynthesizedCircuit &synth) {
    std::ostringstream os;
    std::size_t total_x = 0;
    std::size_t total_r = 0;
    for (const TBlock &b : synth.blocks) {
        std::size_t n_x = 0;
        std::size_t n_r = 0;
        for (std::size_t g = b.first_gate; g < b.first_gate + b.gate_count; ++g) {
            if (synth.circuit.gates[g].kind == GateKind::SubspaceRot) {
                ++n_r;
            } else {
                ++n_x;
            }
        }
        total_x += n_x;
        total_r += n_r;
        os << "T m=" << b.m << " k'=" << b.kprime << " ell=" << b.ell << " i=" << b.partial
           << " case=" << shape_name(b.shape) << " gates=[" << b.first_gate << ","
           << b.first_gate + b.gate_count << ") X=" << n_x << " R=" << n_r << '\n';
    }
    os << "total T=" << synth.blocks.size() << " X=" << total_x << " R=" << total_r
       << " gates=" << synth.circuit.gates.size() << '\n';
    return os.str();
}

} // namespace dicke
