#include "dicke/gates.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace dicke {

namespace {

void check_levels(int d, int i, int j) {
    if (i < 0 || j >= d) {
        throw LevelOutOfRange("gate levels must lie in [0, d-1]");
    }
    if (i >= j) {
        throw LevelsNotOrdered("gate levels must satisfy i < j");
    }
}

void check_gate_wires(const Gate &gate, int n) {
    if (gate.target < 0 || gate.target >= n) {
        throw PositionOutOfRange("gate target outside register");
    }
    for (const Control &c : gate.controls) {
        if (c.pos < 0 || c.pos >= n) {
            throw PositionOutOfRange("control position outside register");
        }
        if (c.pos == gate.target) {
            throw ControlOnTarget("control coincides with gate target");
        }
        for (const Control &other : gate.controls) {
            if (&other != &c && other.pos == c.pos) {
                throw ControlOnTarget("duplicate control position");
            }
        }
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

Gate x_gate(int i, int j, int target, std::vector<Control> controls) {
    return Gate{GateKind::SubspaceNot, i, j, 0.0, target, std::move(controls)};
}

Gate r_gate(int i, int j, double theta, int target, std::vector<Control> controls) {
    return Gate{GateKind::SubspaceRot, i, j, theta, target, std::move(controls)};
}

Gate c_gate(int target, std::vector<Control> controls) {
    return Gate{GateKind::Conjugate, 0, 0, 0.0, target, std::move(controls)};
}

DenseMatrix r_matrix(int d, int i, int j, double theta) {
    check_levels(d, i, j);
    DenseMatrix m(d, std::vector<double>(d, 0.0));
    for (int a = 0; a < d; ++a) {
        m[a][a] = 1.0;
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    m[i][i] = c;
    m[i][j] = s;
    m[j][i] = -s;
    m[j][j] = c;
    return m;
}

DenseMatrix x_matrix(int d, int i, int j) {
    check_levels(d, i, j);
    DenseMatrix m(d, std::vector<double>(d, 0.0));
    for (int a = 0; a < d; ++a) {
        m[a][a] = 1.0;
    }
    m[i][i] = m[j][j] = 0.0;
    m[i][j] = m[j][i] = 1.0;
    return m;
}

DenseMatrix c_matrix(int d) {
    if (d < 2) {
        throw DimensionMismatch("c_matrix: d must be >= 2");
    }
    DenseMatrix m(d, std::vector<double>(d, 0.0));
    for (int a = 0; a < d; ++a) {
        m[a][d - 1 - a] = 1.0;
    }
    return m;
}

void apply_in_place(StateVector &state, const Gate &gate) {
    const int d = state.dim();
    const int n = state.sites();
    check_gate_wires(gate, n);
    if (gate.kind != GateKind::Conjugate) {
        check_levels(d, gate.level_i, gate.level_j);
    }
    for (const Control &c : gate.controls) {
        if (c.value < 0 || c.value >= d) {
            throw LevelOutOfRange("control value outside [0, d-1]");
        }
    }

    std::vector<std::size_t> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = 1;
    for (int p = 0; p < n; ++p) {
        powers[static_cast<std::size_t>(p) + 1] = powers[static_cast<std::size_t>(p)] * static_cast<std::size_t>(d);
    }
    const std::size_t stride = powers[static_cast<std::size_t>(gate.target)];

    const double cos_half = std::cos(gate.theta / 2.0);
    const double sin_half = std::sin(gate.theta / 2.0);

    // Walk the base indices whose target digit is 0; each owns one
    // d-dimensional sub-block at offsets base + v*stride. Controls never sit
    // on the target wire, so the whole block shares one control check.
    const std::size_t total = state.size();
    const std::size_t block_span = stride * static_cast<std::size_t>(d);
    for (std::size_t high = 0; high < total; high += block_span) {
        for (std::size_t low = 0; low < stride; ++low) {
            const std::size_t base = high + low;
            bool active = true;
            for (const Control &c : gate.controls) {
                const std::size_t cstride = powers[static_cast<std::size_t>(c.pos)];
                if (static_cast<int>(base / cstride % static_cast<std::size_t>(d)) != c.value) {
                    active = false;
                    break;
                }
            }
            if (!active) {
                continue;
            }
            switch (gate.kind) {
            case GateKind::SubspaceNot: {
                std::swap(state[base + stride * static_cast<std::size_t>(gate.level_i)],
                          state[base + stride * static_cast<std::size_t>(gate.level_j)]);
                break;
            }
            case GateKind::SubspaceRot: {
                Amplitude &ai = state[base + stride * static_cast<std::size_t>(gate.level_i)];
                Amplitude &aj = state[base + stride * static_cast<std::size_t>(gate.level_j)];
                const Amplitude new_i = cos_half * ai + sin_half * aj;
                const Amplitude new_j = -sin_half * ai + cos_half * aj;
                ai = new_i;
                aj = new_j;
                break;
            }
            case GateKind::Conjugate: {
                for (int v = 0; v < d / 2; ++v) {
                    std::swap(state[base + stride * static_cast<std::size_t>(v)],
                              state[base + stride * static_cast<std::size_t>(d - 1 - v)]);
                }
                break;
            }
            }
        }
    }
}

StateVector apply(const StateVector &state, const Gate &gate) {
    StateVector out = state;
    apply_in_place(out, gate);
    return out;
}

void run_in_place(StateVector &state, const Circuit &circuit) {
    if (circuit.d != state.dim() || circuit.n != state.sites()) {
        throw DimensionMismatch("run: circuit and state have different shapes");
    }
    for (const Gate &gate : circuit.gates) {
        apply_in_place(state, gate);
    }
}

StateVector run(const StateVector &state, const Circuit &circuit) {
    StateVector out = state;
    run_in_place(out, circuit);
    return out;
}

std::string circuit_to_json(const Circuit &circuit) {
    std::ostringstream os;
    os << "{\"d\":" << circuit.d << ",\"n\":" << circuit.n << ",\"gates\":[";
    bool first_gate = true;
    for (const Gate &g : circuit.gates) {
        if (!first_gate) {
            os << ',';
        }
        first_gate = false;
        os << "{\"kind\":\"";
        switch (g.kind) {
        case GateKind::SubspaceNot:
            os << "X";
            break;
        case GateKind::SubspaceRot:
            os << "R";
            break;
        case GateKind::Conjugate:
            os << "C";
            break;
        }
        os << '"';
        if (g.kind != GateKind::Conjugate) {
            os << ",\"i\":" << g.level_i << ",\"j\":" << g.level_j;
        }
        if (g.kind == GateKind::SubspaceRot) {
            os << ",\"theta\":" << format_double(g.theta);
        }
        os << ",\"target\":" << g.target << ",\"controls\":[";
        bool first_ctrl = true;
        for (const Control &c : g.controls) {
            if (!first_ctrl) {
                os << ',';
            }
            first_ctrl = false;
            os << '[' << c.pos << ',' << c.value << ']';
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

Circuit circuit_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("circuit json: ") + e.what());
    }
    try {
        Circuit circuit;
        circuit.d = j.at("d").get<int>();
        circuit.n = j.at("n").get<int>();
        for (const auto &jg : j.at("gates")) {
            Gate g;
            const std::string kind = jg.at("kind").get<std::string>();
            if (kind == "X") {
                g.kind = GateKind::SubspaceNot;
            } else if (kind == "R") {
                g.kind = GateKind::SubspaceRot;
            } else if (kind == "C") {
                g.kind = GateKind::Conjugate;
            } else {
                throw ParseError("circuit json: unknown gate kind '" + kind + "'");
            }
            if (g.kind != GateKind::Conjugate) {
                g.level_i = jg.at("i").get<int>();
                g.level_j = jg.at("j").get<int>();
            }
            if (g.kind == GateKind::SubspaceRot) {
                g.theta = jg.at("theta").get<double>();
            }
            g.target = jg.at("target").get<int>();
            for (const auto &jc : jg.at("controls")) {
                g.controls.push_back(Control{jc.at(0).get<int>(), jc.at(1).get<int>()});
            }
            circuit.gates.push_back(std::move(g));
        }
        return circuit;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("circuit json: ") + e.what());
    }
}

} // namespace dicke
