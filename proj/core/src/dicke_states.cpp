#include "dicke/dicke_states.hpp"

#include <cmath>
#include <ostream>

namespace dicke {

DickeSpec::DickeSpec(int s2_, int n_, int k_) : s2(s2_), n(n_), k(k_) {
    if (s2 < 1) {
        throw InvalidSpec("DickeSpec: 2s must be >= 1");
    }
    if (n < 1) {
        throw InvalidSpec("DickeSpec: n must be >= 1");
    }
    if (k < 0 || k > s2 * n) {
        throw InvalidSpec("DickeSpec: k must lie in [0, 2sn]");
    }
}

SqrtRational normalization_a(const DickeSpec &spec) {
    const BigInt kfact = factorial(spec.k);
    return SqrtRational(BigInt(1), kfact * kfact * binomial(spec.max_k(), spec.k));
}

BigRational coeff_c_squared(const DickeSpec &spec, int j) {
    if (j < 0 || j > spec.s2) {
        throw LevelOutOfRange("coeff_c: level outside [0, 2s]");
    }
    const BigInt num = binomial(spec.s2, j) * binomial(spec.s2 * (spec.n - 1), spec.k - j);
    return BigRational(num, binomial(spec.max_k(), spec.k));
}

SqrtRational coeff_c(const DickeSpec &spec, int j) {
    return SqrtRational(coeff_c_squared(spec, j));
}

SqrtRational closed_form_amplitude(const DickeSpec &spec, std::span<const int> digits) {
    int sum = 0;
    BigInt num = 1;
    for (int j : digits) {
        if (j < 0 || j > spec.s2) {
            throw DigitOutOfRange("closed_form_amplitude: digit outside [0, 2s]");
        }
        sum += j;
        num *= binomial(spec.s2, j);
    }
    if (sum != spec.k) {
        return SqrtRational();
    }
    return SqrtRational(num, binomial(spec.max_k(), spec.k));
}

StateVector closed_form_state(const DickeSpec &spec) {
    StateVector state(spec.d(), spec.n);
    std::vector<int> digits(static_cast<std::size_t>(spec.n), 0);
    const BigInt total = binomial(spec.max_k(), spec.k);
    for (std::size_t index = 0; index < state.size(); ++index) {
        int sum = 0;
        for (int v : digits) {
            sum += v;
        }
        if (sum == spec.k) {
            BigInt num = 1;
            for (int v : digits) {
                num *= binomial(spec.s2, v);
            }
            state[index] = SqrtRational(num, total).to_double();
        }
        // next digit string, little-endian increment
        for (std::size_t p = 0; p < digits.size(); ++p) {
            if (++digits[p] < spec.d()) {
                break;
            }
            digits[p] = 0;
        }
    }
    return state;
}

StateVector lowering_oracle_state(const DickeSpec &spec) {
    const int d = spec.d();
    // Single-site lowering matrix: S^-|j> = sqrt((2s-j)(j+1)) |j+1>.
    std::vector<double> lower(static_cast<std::size_t>(d), 0.0);
    for (int j = 0; j + 1 < d; ++j) {
        lower[static_cast<std::size_t>(j)] =
            std::sqrt(static_cast<double>(spec.s2 - j) * static_cast<double>(j + 1));
    }

    StateVector state(d, spec.n);
    state[0] = 1.0; // |0>^n
    std::vector<std::size_t> powers(static_cast<std::size_t>(spec.n));
    powers[0] = 1;
    for (int p = 1; p < spec.n; ++p) {
        powers[static_cast<std::size_t>(p)] = powers[static_cast<std::size_t>(p) - 1] * static_cast<std::size_t>(d);
    }

    for (int step = 0; step < spec.k; ++step) {
        StateVector next(d, spec.n);
        for (std::size_t index = 0; index < state.size(); ++index) {
            if (state[index] == Amplitude{}) {
                continue;
            }
            std::size_t rest = index;
            for (int p = 0; p < spec.n; ++p) {
                const int digit = static_cast<int>(rest % static_cast<std::size_t>(d));
                rest /= static_cast<std::size_t>(d);
                if (digit + 1 < d) {
                    next[index + powers[static_cast<std::size_t>(p)]] +=
                        state[index] * lower[static_cast<std::size_t>(digit)];
                }
            }
        }
        state = std::move(next);
    }

    const double scale = normalization_a(spec).to_double();
    for (auto &a : state.amplitudes()) {
        a *= scale;
    }
    return state;
}

std::vector<int> reference_digits(const DickeSpec &spec) {
    std::vector<int> digits(static_cast<std::size_t>(spec.n), 0);
    const int ell = spec.ell();
    for (int p = 0; p < ell && p < spec.n; ++p) {
        digits[static_cast<std::size_t>(p)] = spec.s2;
    }
    if (ell < spec.n) {
        digits[static_cast<std::size_t>(ell)] = spec.partial_level();
    }
    return digits;
}

StateVector reference_state(const DickeSpec &spec) {
    return basis_state(spec.d(), reference_digits(spec));
}

StateVector qudit_dicke_state(int d, int n, const KVector &kvec) {
    if (static_cast<int>(kvec.size()) != d) {
        throw SumMismatch("qudit_dicke_state: kvec must have d entries");
    }
    long sum = 0;
    for (int c : kvec) {
        if (c < 0) {
            throw SumMismatch("qudit_dicke_state: counts must be nonnegative");
        }
        sum += c;
    }
    if (sum != n) {
        throw SumMismatch("qudit_dicke_state: counts must sum to n");
    }
    StateVector state(d, n);
    const double amp = SqrtRational(BigInt(1), multinomial(n, kvec)).to_double();
    std::vector<int> counts(kvec.size());
    for (std::size_t index = 0; index < state.size(); ++index) {
        std::fill(counts.begin(), counts.end(), 0);
        std::size_t rest = index;
        for (int p = 0; p < n; ++p) {
            ++counts[rest % static_cast<std::size_t>(d)];
            rest /= static_cast<std::size_t>(d);
        }
        if (counts == kvec) {
            state[index] = amp;
        }
    }
    return state;
}

namespace {

void enumerate_rec(int level, int d, int sites_left, int weight_left,
                   KVector &current, std::vector<KVector> &out) {
    if (level == d - 1) {
        // last level carries all remaining sites; weight must match exactly
        if (weight_left == sites_left * (d - 1)) {
            current[static_cast<std::size_t>(level)] = sites_left;
            out.push_back(current);
        }
        return;
    }
    for (int c = 0; c <= sites_left; ++c) {
        const int rem_weight = weight_left - c * level;
        const int rem_sites = sites_left - c;
        if (rem_weight < 0 || rem_weight > rem_sites * (d - 1)) {
            continue;
        }
        current[static_cast<std::size_t>(level)] = c;
        enumerate_rec(level + 1, d, rem_sites, rem_weight, current, out);
    }
    current[static_cast<std::size_t>(level)] = 0;
}

} // namespace

std::vector<KVector> enumerate_kvectors(const DickeSpec &spec) {
    std::vector<KVector> out;
    KVector current(static_cast<std::size_t>(spec.d()), 0);
    enumerate_rec(0, spec.d(), spec.n, spec.k, current, out);
    return out;
}

BigInt g_count(const DickeSpec &spec) {
    const auto coeffs = gaussian_binomial(spec.n + spec.s2, spec.s2);
    if (spec.k >= static_cast<int>(coeffs.size())) {
        return 0;
    }
    return coeffs[static_cast<std::size_t>(spec.k)];
}

SqrtRational alpha_coeff(const DickeSpec &spec, const KVector &kvec) {
    if (static_cast<int>(kvec.size()) != spec.d()) {
        throw NotASolution("alpha_coeff: kvec must have 2s+1 entries");
    }
    long sites = 0;
    long weight = 0;
    for (int j = 0; j < spec.d(); ++j) {
        const int c = kvec[static_cast<std::size_t>(j)];
        if (c < 0) {
            throw NotASolution("alpha_coeff: counts must be nonnegative");
        }
        sites += c;
        weight += static_cast<long>(j) * c;
    }
    if (sites != spec.n || weight != spec.k) {
        throw NotASolution("alpha_coeff: kvec does not solve the constraints");
    }
    BigInt num = multinomial(spec.n, kvec);
    for (int j = 0; j < spec.d(); ++j) {
        const BigInt base = binomial(spec.s2, j);
        for (int rep = 0; rep < kvec[static_cast<std::size_t>(j)]; ++rep) {
            num *= base;
        }
    }
    return SqrtRational(num, binomial(spec.max_k(), spec.k));
}

std::vector<std::pair<KVector, SqrtRational>> decompose(const DickeSpec &spec) {
    std::vector<std::pair<KVector, SqrtRational>> out;
    for (const KVector &kvec : enumerate_kvectors(spec)) {
        SqrtRational alpha = alpha_coeff(spec, kvec);
        out.emplace_back(kvec, std::move(alpha));
    }
    return out;
}

StateVector decomposition_state(const DickeSpec &spec) {
    StateVector state(spec.d(), spec.n);
    for (const auto &[kvec, alpha] : decompose(spec)) {
        const StateVector component = qudit_dicke_state(spec.d(), spec.n, kvec);
        const double a = alpha.to_double();
        for (std::size_t i = 0; i < state.size(); ++i) {
            state[i] += a * component[i];
        }
    }
    return state;
}

void write_decomposition_text(std::ostream &os, const DickeSpec &spec) {
    for (const auto &[kvec, alpha] : decompose(spec)) {
        for (int c : kvec) {
            os << c << ' ';
        }
        os << ' ' << alpha.num() << ' ' << alpha.den() << '\n';
    }
}

} // namespace dicke
