#include "dicke/state_vector.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace dicke {

namespace {
constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 31;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
} // namespace

std::size_t state_capacity(int d, int n) {
    if (d < 2) {
        throw DimensionMismatch("qudit dimension must be >= 2");
    }
    if (n < 1) {
        throw DimensionMismatch("qudit count must be >= 1");
    }
    std::size_t size = 1;
    for (int p = 0; p < n; ++p) {
        if (size > kMaxAmplitudes / static_cast<std::size_t>(d)) {
            throw CapacityExceeded("d^n exceeds 2^31 amplitudes");
        }
        size *= static_cast<std::size_t>(d);
    }
    return size;
}

StateVector::StateVector(int d, int n) : d_(d), n_(n), amps_(state_capacity(d, n)) {}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

std::size_t encode_digits(int d, std::span<const int> digits) {
    std::size_t index = 0;
    for (std::size_t p = digits.size(); p-- > 0;) {
        index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(digits[p]);
    }
    return index;
}

std::vector<int> decode_index(int d, int n, std::size_t index) {
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        digits[static_cast<std::size_t>(p)] = static_cast<int>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return digits;
}

StateVector basis_state(int d, std::span<const int> digits) {
    for (int j : digits) {
        if (j < 0 || j >= d) {
            throw DigitOutOfRange("basis_state: digit outside [0, d-1]");
        }
    }
    StateVector state(d, static_cast<int>(digits.size()));
    state[encode_digits(d, digits)] = 1.0;
    return state;
}

StateVector basis_state(int d, std::initializer_list<int> digits) {
    return basis_state(d, std::span<const int>(digits.begin(), digits.size()));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("tensor: qudit dimensions differ");
    }
    StateVector out(a.dim(), a.sites() + b.sites());
    const std::size_t block = b.size();
    for (std::size_t ia = 0; ia < a.size(); ++ia) {
        if (a[ia] == Amplitude{}) {
            continue;
        }
        for (std::size_t ib = 0; ib < block; ++ib) {
            out[ia * block + ib] = a[ia] * b[ib];
        }
    }
    return out;
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim() || a.sites() != b.sites()) {
        throw DimensionMismatch("inner_product: states have different shapes");
    }
    Amplitude s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

double max_amplitude_diff(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim() || a.sites() != b.sites()) {
        throw DimensionMismatch("max_amplitude_diff: states have different shapes");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

void write_state_text(std::ostream &os, const StateVector &state) {
    os << state.dim() << ' ' << state.sites() << '\n';
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Amplitude &a = state[i];
        if (a == Amplitude{}) {
            continue;
        }
        os << i << ' ' << format_double(a.real()) << ' ' << format_double(a.imag()) << '\n';
    }
}

StateVector read_state_text(std::istream &is) {
    int d = 0;
    int n = 0;
    if (!(is >> d >> n)) {
        throw ParseError("state text: missing 'd n' header");
    }
    StateVector state(d, n);
    std::size_t index = 0;
    double re = 0.0;
    double im = 0.0;
    while (is >> index >> re >> im) {
        if (index >= state.size()) {
            throw ParseError("state text: index out of range");
        }
        state[index] = Amplitude(re, im);
    }
    if (!is.eof() && is.fail()) {
        throw ParseError("state text: malformed amplitude line");
    }
    return state;
}

} // namespace dicke
