#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

using Amplitude = std::complex<double>;

/// Dense statevector of n qudits with d levels each.
///
/// Amplitude index I encodes the digit string j_{n-1} ... j_1 j_0 in base d
/// with qudit 0 as the least significant digit: I = sum_p j_p d^p. A ket
/// written |j_{n-1} ... j_0> therefore reads left to right from the most
/// significant digit, and tensor products place the left factor on the
/// high digits.
class StateVector {
  public:
    /// Zero vector (not normalized) over d^n amplitudes.
    StateVector(int d, int n);

    int dim() const { return d_; }
    int sites() const { return n_; }
    std::size_t size() const { return amps_.size(); }

    const Amplitude &operator[](std::size_t index) const { return amps_[index]; }
    Amplitude &operator[](std::size_t index) { return amps_[index]; }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    double norm_squared() const;
    bool is_normalized(double tol = 1e-12) const;

  private:
    int d_;
    int n_;
    std::vector<Amplitude> amps_;
};

/// Number of amplitudes d^n, refusing anything above 2^31.
std::size_t state_capacity(int d, int n);

/// Integer index of a little-endian digit string.
std::size_t encode_digits(int d, std::span<const int> digits);

/// Little-endian digit string of an index, length n.
std::vector<int> decode_index(int d, int n, std::size_t index);

/// Computational basis state |j_{n-1} ... j_0> from little-endian digits.
StateVector basis_state(int d, std::span<const int> digits);
StateVector basis_state(int d, std::initializer_list<int> digits);

/// Tensor product; a is the left factor and occupies the high digits.
StateVector tensor(const StateVector &a, const StateVector &b);

/// <a|b>, conjugate-linear in a.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2 for normalized a, b.
double fidelity(const StateVector &a, const StateVector &b);

/// Largest |a[I] - b[I]| over all amplitudes.
double max_amplitude_diff(const StateVector &a, const StateVector &b);

/// Text format: header "d n", then one line "index re im" per nonzero
/// amplitude in ascending index order, 17 significant digits.
void write_state_text(std::ostream &os, const StateVector &state);
StateVector read_state_text(std::istream &is);

} // namespace dicke
