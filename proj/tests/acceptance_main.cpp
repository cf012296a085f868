// Acceptance suite: exercises every shipped guarantee at its pinned
// tolerance and prints one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dicke/circuit_synth.hpp"
#include "dicke/dicke_states.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/gates.hpp"

using namespace dicke;

namespace {

int failures_reported = 0;

void note_failure(const std::string &what) {
    if (failures_reported < 25) {
        std::fprintf(stderr, "    FAIL detail: %s\n", what.c_str());
    }
    ++failures_reported;
}

// s2 -> largest n in the simulation grid
std::vector<std::pair<int, int>> simulation_grid() {
    return {{1, 5}, {2, 5}, {3, 5}, {4, 3}};
}

bool criterion_preparation_fidelity() {
    bool ok = true;
    for (const auto &[s2, n_max] : simulation_grid()) {
        for (int n = 1; n <= n_max; ++n) {
            const Circuit full = build_U(s2, n).circuit;
            for (int k = 0; k <= s2 * n; ++k) {
                const DickeSpec spec(s2, n, k);
                const StateVector target = closed_form_state(spec);
                const StateVector ref = reference_state(spec);
                const double f_full = fidelity(run(ref, full), target);
                const double f_reduced =
                    fidelity(run(ref, build_U_simplified(spec).circuit), target);
                if (f_full < 1.0 - 1e-10 || f_reduced < 1.0 - 1e-10) {
                    ok = false;
                    note_failure("prepare s2=" + std::to_string(s2) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " fidelity full=" +
                                 std::to_string(f_full) + " reduced=" + std::to_string(f_reduced));
                }
            }
        }
    }
    return ok;
}

bool criterion_triple_oracle() {
    bool ok = true;
    for (const auto &[s2, n_max] : simulation_grid()) {
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 0; k <= s2 * n; ++k) {
                const DickeSpec spec(s2, n, k);
                const StateVector closed = closed_form_state(spec);
                const StateVector lowering = lowering_oracle_state(spec);
                const StateVector decomposed = decomposition_state(spec);
                const double f1 = fidelity(closed, lowering);
                const double f2 = fidelity(closed, decomposed);
                const double f3 = fidelity(lowering, decomposed);
                if (f1 < 1.0 - 1e-10 || f2 < 1.0 - 1e-10 || f3 < 1.0 - 1e-10) {
                    ok = false;
                    note_failure("oracle s2=" + std::to_string(s2) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
                }
            }
        }
    }
    return ok;
}

bool criterion_reference_values() {
    bool ok = true;
    // 3 qubits, k=2: every weight-2 amplitude is exactly sqrt(1/3)
    {
        const DickeSpec spec(1, 3, 2);
        const SqrtRational expected(BigInt(1), BigInt(3));
        for (const auto &digits :
             {std::vector<int>{0, 1, 1}, std::vector<int>{1, 0, 1}, std::vector<int>{1, 1, 0}}) {
            if (!(closed_form_amplitude(spec, digits) == expected)) {
                ok = false;
                note_failure("qubit n=3 k=2 amplitude is not sqrt(1/3)");
            }
        }
    }
    // 3 qutrits, k=2: sqrt(4/15) on {0,1,1} patterns, sqrt(1/15) on {0,0,2}
    {
        const DickeSpec spec(2, 3, 2);
        if (!(closed_form_amplitude(spec, std::vector<int>{1, 1, 0}) ==
              SqrtRational(BigInt(4), BigInt(15)))) {
            ok = false;
            note_failure("qutrit n=3 k=2 mixed amplitude is not sqrt(4/15)");
        }
        if (!(closed_form_amplitude(spec, std::vector<int>{0, 0, 2}) ==
              SqrtRational(BigInt(1), BigInt(15)))) {
            ok = false;
            note_failure("qutrit n=3 k=2 paired amplitude is not sqrt(1/15)");
        }
        // decomposition coefficients 2/sqrt(5) and 1/sqrt(5)
        if (!(alpha_coeff(spec, {1, 2, 0}) == SqrtRational(BigInt(4), BigInt(5))) ||
            !(alpha_coeff(spec, {2, 0, 1}) == SqrtRational(BigInt(1), BigInt(5)))) {
            ok = false;
            note_failure("qutrit n=3 k=2 decomposition coefficients wrong");
        }
    }
    return ok;
}

bool criterion_step_operator_contract() {
    bool ok = true;
    for (int s2 : {1, 2, 3}) {
        for (int m = 2; m <= 5; ++m) {
            std::vector<Circuit> t_circuits(static_cast<std::size_t>(s2 * m));
            for (int kprime = 1; kprime <= s2 * m - 1; ++kprime) {
                t_circuits[static_cast<std::size_t>(kprime)] =
                    build_T(TSpec(s2, m, kprime)).circuit;
            }
            for (int kprime = 1; kprime <= s2 * m - 1; ++kprime) {
                const Circuit &t_circ = t_circuits[static_cast<std::size_t>(kprime)];

                // identity on every other reference state, bit-exact
                for (int k = 0; k <= s2 * m; ++k) {
                    if (k == kprime) {
                        continue;
                    }
                    const StateVector ref = reference_state(DickeSpec(s2, m, k));
                    if (max_amplitude_diff(run(ref, t_circ), ref) != 0.0) {
                        ok = false;
                        note_failure("T identity s2=" + std::to_string(s2) + " m=" +
                                     std::to_string(m) + " k'=" + std::to_string(kprime) +
                                     " k=" + std::to_string(k));
                    }
                }

                // one-site split action on its own reference
                const DickeSpec own(s2, m, kprime);
                StateVector expected(own.d(), m);
                for (int j = 0; j <= s2; ++j) {
                    const int rest = kprime - j;
                    if (rest < 0 || rest > s2 * (m - 1)) {
                        continue;
                    }
                    const double c = coeff_c(own, j).to_double();
                    const StateVector part =
                        tensor(reference_state(DickeSpec(s2, m - 1, rest)),
                               basis_state(own.d(), std::vector<int>{j}));
                    for (std::size_t i = 0; i < expected.size(); ++i) {
                        expected[i] += c * part[i];
                    }
                }
                if (max_amplitude_diff(run(reference_state(own), t_circ), expected) > 1e-12) {
                    ok = false;
                    note_failure("T action s2=" + std::to_string(s2) + " m=" + std::to_string(m) +
                                 " k'=" + std::to_string(kprime));
                }

                // fixes the images of all earlier step operators
                for (int k = 1; k < kprime; ++k) {
                    const StateVector image =
                        run(reference_state(DickeSpec(s2, m, k)),
                            t_circuits[static_cast<std::size_t>(k)]);
                    if (max_amplitude_diff(run(image, t_circ), image) > 1e-12) {
                        ok = false;
                        note_failure("T image s2=" + std::to_string(s2) + " m=" +
                                     std::to_string(m) + " k'=" + std::to_string(kprime) +
                                     " k=" + std::to_string(k));
                    }
                }
            }
        }
    }
    return ok;
}

bool criterion_counting() {
    bool ok = true;
    for (int s2 : {1, 2, 3}) {
        for (int n = 1; n <= 6; ++n) {
            if (static_cast<long long>(build_U(s2, n).blocks.size()) != full_T_count(s2, n)) {
                ok = false;
                note_failure("full count s2=" + std::to_string(s2) + " n=" + std::to_string(n));
            }
            for (int k = 0; k <= s2 * n; ++k) {
                const DickeSpec spec(s2, n, k);
                const long long analytic = gate_count_N(spec);
                if (static_cast<long long>(build_U_simplified(spec).blocks.size()) != analytic) {
                    ok = false;
                    note_failure("reduced count s2=" + std::to_string(s2) + " n=" +
                                 std::to_string(n) + " k=" + std::to_string(k));
                }
                if (analytic != gate_count_N(DickeSpec(s2, n, s2 * n - k))) {
                    ok = false;
                    note_failure("count duality s2=" + std::to_string(s2) + " n=" +
                                 std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }
    }
    return ok;
}

bool criterion_combinatorial_identity() {
    bool ok = true;
    for (int s2 : {1, 2, 3, 4}) {
        for (int n = 1; n <= 6; ++n) {
            for (int k = 0; k <= s2 * n; ++k) {
                const DickeSpec spec(s2, n, k);
                const auto solutions = enumerate_kvectors(spec);
                if (g_count(spec) != static_cast<long>(solutions.size())) {
                    ok = false;
                    note_failure("g_count s2=" + std::to_string(s2) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
                }
                BigInt sum = 0;
                for (const KVector &kvec : solutions) {
                    BigInt term = multinomial(n, kvec);
                    for (int j = 0; j <= s2; ++j) {
                        const BigInt base = binomial(s2, j);
                        for (int rep = 0; rep < kvec[static_cast<std::size_t>(j)]; ++rep) {
                            term *= base;
                        }
                    }
                    sum += term;
                }
                if (sum != binomial(s2 * n, k)) {
                    ok = false;
                    note_failure("identity s2=" + std::to_string(s2) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
                }
            }
        }
    }
    return ok;
}

bool criterion_duality() {
    bool ok = true;
    for (int s2 : {1, 2, 3, 4}) {
        for (int n = 1; n <= 5; ++n) {
            for (int k = 0; k <= s2 * n; ++k) {
                const DickeSpec spec(s2, n, k);
                const DickeSpec dual_spec(s2, n, s2 * n - k);
                StateVector state = closed_form_state(spec);
                for (int p = 0; p < n; ++p) {
                    apply_in_place(state, c_gate(p));
                }
                if (max_amplitude_diff(state, closed_form_state(dual_spec)) != 0.0) {
                    ok = false;
                    note_failure("duality float s2=" + std::to_string(s2) + " n=" +
                                 std::to_string(n) + " k=" + std::to_string(k));
                }
                // exact amplitude permutation under digit reversal j -> 2s-j
                std::size_t total = 1;
                for (int p = 0; p < n; ++p) {
                    total *= static_cast<std::size_t>(spec.d());
                }
                for (std::size_t index = 0; index < total; ++index) {
                    auto digits = decode_index(spec.d(), n, index);
                    auto flipped = digits;
                    for (auto &v : flipped) {
                        v = s2 - v;
                    }
                    if (!(closed_form_amplitude(spec, digits) ==
                          closed_form_amplitude(dual_spec, flipped))) {
                        ok = false;
                        note_failure("duality exact s2=" + std::to_string(s2) + " n=" +
                                     std::to_string(n) + " k=" + std::to_string(k));
                        break;
                    }
                }
            }
        }
    }
    return ok;
}

bool criterion_entropy() {
    bool ok = true;

    // exact weight normalization and both symmetries, bit-identical
    for (int s2 : {1, 2, 3, 4}) {
        for (int n = 2; n <= 8; ++n) {
            for (int k = 0; k <= s2 * n; ++k) {
                for (int l = 1; l < n; ++l) {
                    const DickeSpec spec(s2, n, k);
                    BigRational sum = 0;
                    for (const auto &w : schmidt_lambdas(spec, l)) {
                        sum += w.lambda;
                    }
                    if (sum != 1) {
                        ok = false;
                        note_failure("lambda sum s2=" + std::to_string(s2) + " n=" +
                                     std::to_string(n) + " k=" + std::to_string(k) +
                                     " l=" + std::to_string(l));
                    }
                    const double base = entropy_exact(spec, l);
                    if (entropy_exact(DickeSpec(s2, n, s2 * n - k), l) != base ||
                        entropy_exact(spec, n - l) != base) {
                        ok = false;
                        note_failure("entropy symmetry s2=" + std::to_string(s2) + " n=" +
                                     std::to_string(n) + " k=" + std::to_string(k) +
                                     " l=" + std::to_string(l));
                    }
                }
            }
        }
    }

    // Schmidt reconstruction over every register with at most 3^6 amplitudes
    for (const auto &[s2, n_max] : {std::pair{1, 9}, {2, 6}, {3, 4}, {4, 4}}) {
        for (int n = 2; n <= n_max; ++n) {
            for (int k = 0; k <= s2 * n; ++k) {
                const DickeSpec spec(s2, n, k);
                const StateVector closed = closed_form_state(spec);
                for (int l = 1; l < n; ++l) {
                    if (fidelity(schmidt_reconstruct(spec, l), closed) < 1.0 - 1e-10) {
                        ok = false;
                        note_failure("schmidt s2=" + std::to_string(s2) + " n=" +
                                     std::to_string(n) + " k=" + std::to_string(k) +
                                     " l=" + std::to_string(l));
                    }
                }
            }
        }
    }

    // Gaussian approximation quality at the half-filled midpoint of n=50
    {
        const DickeSpec spec(2, 50, 50);
        const double gap = std::abs(entropy_exact(spec, 25) - entropy_gaussian(spec, 25));
        if (gap > 0.05) {
            ok = false;
            note_failure("gaussian gap at n=50 is " + std::to_string(gap));
        }
    }

    // ... and the gap shrinks monotonically along n = 10, 20, 40
    {
        double previous = 1e300;
        for (int n : {10, 20, 40}) {
            const DickeSpec spec(2, n, n);
            const double gap =
                std::abs(entropy_exact(spec, n / 2) - entropy_gaussian(spec, n / 2));
            if (gap >= previous) {
                ok = false;
                note_failure("gaussian gap not decreasing at n=" + std::to_string(n));
            }
            previous = gap;
        }
    }

    // exact variance mapping onto the stretched spin-1/2 chain
    for (int s2 : {2, 3, 4}) {
        for (int n = 2; n <= 6; ++n) {
            for (int k = 0; k <= s2 * n; ++k) {
                for (int l = 1; l < n; ++l) {
                    if (variance_sigma2(DickeSpec(s2, n, k), l) !=
                        variance_sigma2(DickeSpec(1, s2 * n, k), s2 * l)) {
                        ok = false;
                        note_failure("variance mapping s2=" + std::to_string(s2) + " n=" +
                                     std::to_string(n) + " k=" + std::to_string(k) +
                                     " l=" + std::to_string(l));
                    }
                }
            }
        }
    }
    return ok;
}

} // namespace

int main() {
    const auto started = std::chrono::steady_clock::now();
    bool all_ok = true;
    int index = 0;
    auto report = [&](const char *label, bool (*check)()) {
        const bool ok = check();
        std::printf("criterion %d: %-52s %s\n", ++index, label, ok ? "PASS" : "FAIL");
        std::fflush(stdout);
        all_ok = all_ok && ok;
    };

    report("preparation fidelity (full and reduced circuits)", criterion_preparation_fidelity);
    report("triple-oracle state equivalence", criterion_triple_oracle);
    report("exact reference amplitudes and coefficients", criterion_reference_values);
    report("step-operator contract", criterion_step_operator_contract);
    report("T-operator counting and duality", criterion_counting);
    report("combinatorial identity and solution counts", criterion_combinatorial_identity);
    report("level-reversal duality as exact permutation", criterion_duality);
    report("entanglement entropy suite", criterion_entropy);

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::printf("acceptance: %s in %lld ms\n", all_ok ? "ALL PASS" : "FAILURES",
                static_cast<long long>(elapsed.count()));
    return all_ok ? 0 : 1;
}
