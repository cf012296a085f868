#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "dicke/big_math.hpp"
#include "dicke/state_vector.hpp"

namespace dicke {

/// The triple (s, n, k) naming a spin-s Dicke state on n qudits, with the
/// spin stored doubled (s2 = 2s) so half-integer spins stay exact.
///
/// k splits uniquely as k = 2s*ell + i with 0 <= i < 2s; ell counts the
/// sites of the reference state held at the top level 2s and i is the
/// partial excitation on the next site. d = 2s + 1.
struct DickeSpec {
    int s2;
    int n;
    int k;

    DickeSpec(int s2_, int n_, int k_);

    int d() const { return s2 + 1; }
    int ell() const { return k / s2; }
    int partial_level() const { return k - s2 * ell(); }
    int max_k() const { return s2 * n; }
};

/// Occupation vector k = (k_0, ..., k_{2s}): k_j sites hold level j.
using KVector = std::vector<int>;

/// Normalization a = 1 / (k! sqrt(binom(2sn, k))) of the lowering-operator
/// construction, held exactly as sqrt(1 / (k!^2 binom(2sn, k))).
SqrtRational normalization_a(const DickeSpec &spec);

/// Recursion coefficient c_j = sqrt(binom(2s,j) binom(2sn-2s,k-j) / binom(2sn,k)),
/// zero whenever k-j falls outside [0, 2s(n-1)].
SqrtRational coeff_c(const DickeSpec &spec, int j);
BigRational coeff_c_squared(const DickeSpec &spec, int j);

/// Exact amplitude of the closed-form state on one basis digit string:
/// sqrt(prod_p binom(2s, j_p) / binom(2sn, k)) if the digits sum to k,
/// zero otherwise.
SqrtRational closed_form_amplitude(const DickeSpec &spec, std::span<const int> digits);

/// The spin-s Dicke state by direct evaluation of its closed form; every
/// amplitude is nonnegative real.
StateVector closed_form_state(const DickeSpec &spec);

/// Independent oracle: applies the total spin-lowering operator k times to
/// |0>^n and rescales by normalization_a. Shares no code path with
/// closed_form_state.
StateVector lowering_oracle_state(const DickeSpec &spec);

/// Little-endian digits of the reference product state
/// |0>^(n-ell-1) |i> |2s>^ell (all sites at 2s when k = 2sn).
std::vector<int> reference_digits(const DickeSpec &spec);
StateVector reference_state(const DickeSpec &spec);

/// Equal-weight superposition over all distinct permutations of the level
/// multiset described by kvec; amplitude 1/sqrt(multinomial).
StateVector qudit_dicke_state(int d, int n, const KVector &kvec);

/// All occupation vectors with sum(k_j) = n and sum(j k_j) = k, in
/// lexicographic order of (k_0, ..., k_{2s}).
std::vector<KVector> enumerate_kvectors(const DickeSpec &spec);

/// Number of such solutions: the coefficient of q^k in the Gaussian
/// binomial binom(n+2s, 2s)_q.
BigInt g_count(const DickeSpec &spec);

/// Decomposition coefficient onto the qudit Dicke state of kvec:
/// sqrt(multinomial(n, kvec)/binom(2sn,k) * prod_j binom(2s,j)^{k_j}).
SqrtRational alpha_coeff(const DickeSpec &spec, const KVector &kvec);

/// Expansion of the spin-s Dicke state over qudit Dicke states, ordered as
/// enumerate_kvectors.
std::vector<std::pair<KVector, SqrtRational>> decompose(const DickeSpec &spec);

/// Rebuild the state from its decomposition (test / verification path).
StateVector decomposition_state(const DickeSpec &spec);

/// Text lines "k0 k1 ... k2s  p q" with alpha = sqrt(p/q).
void write_decomposition_text(std::ostream &os, const DickeSpec &spec);

} // namespace dicke
