#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dicke/circuit_synth.hpp"
#include "dicke/dicke_states.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/gates.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitCapacity = 3;

// Atomic file output: write a sibling temp file, then rename over the target,
// so a failing run never leaves a partial file.
void write_output(const std::string &path, const std::string &content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        os << content;
        if (!os) {
            std::filesystem::remove(tmp);
            throw dicke::Error("cannot write to '" + tmp + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

void perturb_rotations(dicke::Circuit &circuit, double eps) {
    for (dicke::Gate &gate : circuit.gates) {
        if (gate.kind == dicke::GateKind::SubspaceRot) {
            gate.theta += eps;
        }
    }
}

struct Options {
    int s2 = 0;
    int n = 0;
    int k = 0;
    int l = -1;
    bool simplified = false;
    bool describe = false;
    std::string out;
    std::string format;
    std::string entropy_base = "d";
    double tolerance = 1e-10;
    double perturb = 0.0;
};

int cmd_prepare(const Options &opt) {
    const dicke::DickeSpec spec(opt.s2, opt.n, opt.k);
    const auto synth =
        opt.simplified ? dicke::build_U_simplified(spec) : dicke::build_U(opt.s2, opt.n);
    const dicke::StateVector state = dicke::run(dicke::reference_state(spec), synth.circuit);
    std::ostringstream os;
    dicke::write_state_text(os, state);
    write_output(opt.out, os.str());
    return kExitOk;
}

int cmd_verify(const Options &opt) {
    const dicke::DickeSpec spec(opt.s2, opt.n, opt.k);
    auto synth = opt.simplified ? dicke::build_U_simplified(spec) : dicke::build_U(opt.s2, opt.n);
    if (opt.perturb != 0.0) {
        perturb_rotations(synth.circuit, opt.perturb);
    }

    const dicke::StateVector closed = dicke::closed_form_state(spec);
    const dicke::StateVector prepared = dicke::run(dicke::reference_state(spec), synth.circuit);
    const double f_circuit = dicke::fidelity(prepared, closed);
    const double f_lowering = dicke::fidelity(dicke::lowering_oracle_state(spec), closed);
    const double f_decomp = dicke::fidelity(dicke::decomposition_state(spec), closed);

    dicke::StateVector conjugated = closed;
    for (int p = 0; p < spec.n; ++p) {
        dicke::apply_in_place(conjugated, dicke::c_gate(p));
    }
    const dicke::StateVector dual =
        dicke::closed_form_state(dicke::DickeSpec(spec.s2, spec.n, spec.max_k() - spec.k));
    const double duality_diff = dicke::max_amplitude_diff(conjugated, dual);

    const double min_fidelity = 1.0 - opt.tolerance;
    bool ok = true;
    auto report = [&](const char *label, double value, bool pass) {
        std::printf("%s = %.17g  %s\n", label, value, pass ? "PASS" : "FAIL");
        ok = ok && pass;
    };
    report("fidelity(circuit, closed_form)", f_circuit, f_circuit >= min_fidelity);
    report("fidelity(lowering_oracle, closed_form)", f_lowering, f_lowering >= min_fidelity);
    report("fidelity(decomposition, closed_form)", f_decomp, f_decomp >= min_fidelity);
    report("duality max amplitude diff", duality_diff, duality_diff <= opt.tolerance);
    std::printf("overall: %s\n", ok ? "PASS" : "FAIL");
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_synth(const Options &opt) {
    const dicke::DickeSpec spec(opt.s2, opt.n, opt.k);
    const auto synth =
        opt.simplified ? dicke::build_U_simplified(spec) : dicke::build_U(opt.s2, opt.n);
    if (opt.describe) {
        std::cout << dicke::describe(synth);
        if (!opt.out.empty()) {
            write_output(opt.out, dicke::circuit_to_json(synth.circuit) + "\n");
        }
        return kExitOk;
    }
    write_output(opt.out, dicke::circuit_to_json(synth.circuit) + "\n");
    return kExitOk;
}

int cmd_count(const Options &opt) {
    const dicke::DickeSpec spec(opt.s2, opt.n, opt.k);
    const auto simplified = dicke::build_U_simplified(spec);
    const auto full = dicke::build_U(opt.s2, opt.n);
    auto tally = [](const dicke::SynthesizedCircuit &synth) {
        std::size_t n_x = 0;
        std::size_t n_r = 0;
        for (const dicke::Gate &g : synth.circuit.gates) {
            (g.kind == dicke::GateKind::SubspaceRot ? n_r : n_x)++;
        }
        return std::pair<std::size_t, std::size_t>{n_x, n_r};
    };
    const auto [sx, sr] = tally(simplified);
    const auto [fx, fr] = tally(full);
    std::ostringstream os;
    os << "gate_count_N = " << dicke::gate_count_N(spec) << '\n'
       << "full_T_count = " << dicke::full_T_count(opt.s2, opt.n) << '\n'
       << "simplified: T=" << simplified.blocks.size() << " X=" << sx << " R=" << sr
       << " gates=" << simplified.circuit.gates.size() << '\n'
       << "full: T=" << full.blocks.size() << " X=" << fx << " R=" << fr
       << " gates=" << full.circuit.gates.size() << '\n';
    write_output(opt.out, os.str());
    return kExitOk;
}

int cmd_decompose(const Options &opt) {
    const dicke::DickeSpec spec(opt.s2, opt.n, opt.k);
    std::ostringstream os;
    dicke::write_decomposition_text(os, spec);
    write_output(opt.out, os.str());
    return kExitOk;
}

int cmd_entropy(const Options &opt) {
    const dicke::DickeSpec spec(opt.s2, opt.n, opt.k);
    const double scale = opt.entropy_base == "2"
                             ? std::log(static_cast<double>(spec.d())) / std::log(2.0)
                             : 1.0;
    std::ostringstream os;
    dicke::write_entropy_csv_header(os);
    if (opt.l >= 0) {
        dicke::write_entropy_csv_row(os, dicke::entropy_report(spec, opt.l), scale);
    } else {
        for (int l = 1; l < spec.n; ++l) {
            dicke::write_entropy_csv_row(os, dicke::entropy_report(spec, l), scale);
        }
    }
    write_output(opt.out, os.str());
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Construct, synthesize, simulate and analyze spin-s Dicke states "
                 "on n qudits of dimension d = 2s+1 (spin passed doubled: s = s2/2)."};
    app.require_subcommand(1);
    Options opt;

    auto add_spec_options = [&](CLI::App *cmd) {
        cmd->add_option("--s2", opt.s2, "doubled spin 2s (>= 1)")->required();
        cmd->add_option("--n", opt.n, "number of qudits (>= 1)")->required();
        cmd->add_option("--k", opt.k, "number of lowering steps, in [0, s2*n]")->required();
        cmd->add_option("--out", opt.out, "write output to this file (atomic)");
    };

    CLI::App *prepare = app.add_subcommand("prepare", "synthesize, simulate and print the state");
    add_spec_options(prepare);
    prepare->add_flag("--simplified", opt.simplified, "use the k-dependent reduced circuit");
    prepare->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"state-text"}))
        ->default_val("state-text");

    CLI::App *verify = app.add_subcommand("verify", "check circuit output against the analytic state");
    add_spec_options(verify);
    verify->add_flag("--simplified", opt.simplified, "use the k-dependent reduced circuit");
    verify->add_option("--tolerance", opt.tolerance, "fidelity tolerance")->default_val(1e-10);
    verify->add_option("--perturb", opt.perturb, "test hook: offset added to every rotation angle");

    CLI::App *synth = app.add_subcommand("synth", "emit the preparation circuit as JSON");
    add_spec_options(synth);
    synth->add_flag("--simplified", opt.simplified, "use the k-dependent reduced circuit");
    synth->add_flag("--describe", opt.describe, "print per-T provenance and gate tallies");
    synth->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"circuit-json"}))
        ->default_val("circuit-json");

    CLI::App *count = app.add_subcommand("count", "print analytic and literal gate counts");
    add_spec_options(count);

    CLI::App *decompose = app.add_subcommand("decompose", "expansion over qudit Dicke states");
    add_spec_options(decompose);

    CLI::App *entropy = app.add_subcommand("entropy", "bipartite entanglement entropy table");
    add_spec_options(entropy);
    entropy->add_option("--l", opt.l, "partition size (omit to sweep 1..n-1)");
    entropy->add_option("--entropy-base", opt.entropy_base, "entropy units: base d digits or bits")
        ->check(CLI::IsMember({"d", "2"}))
        ->default_val("d");
    entropy->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv"}))
        ->default_val("csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (app.got_subcommand(prepare)) {
            return cmd_prepare(opt);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(opt);
        }
        if (app.got_subcommand(synth)) {
            return cmd_synth(opt);
        }
        if (app.got_subcommand(count)) {
            return cmd_count(opt);
        }
        if (app.got_subcommand(decompose)) {
            return cmd_decompose(opt);
        }
        if (app.got_subcommand(entropy)) {
            return cmd_entropy(opt);
        }
    } catch (const dicke::CapacityExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const dicke::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }
    return kExitBadArguments;
}
