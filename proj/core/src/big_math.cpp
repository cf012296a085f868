#include "dicke/big_math.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace dicke {

namespace {
using HighFloat = boost::multiprecision::cpp_bin_float_50;
}

BigInt factorial(long n) {
    if (n < 0) {
        throw NegativeUpperIndex("factorial: n must be >= 0");
    }
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

BigInt binomial(long a, long b) {
    if (a < 0) {
        throw NegativeUpperIndex("binomial: upper index must be >= 0");
    }
    if (b < 0 || b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // exact: r is binom(a-b+i, i) after this step
    }
    return r;
}

BigInt multinomial(long n, const std::vector<int> &counts) {
    long sum = 0;
    for (int c : counts) {
        if (c < 0) {
            throw SumMismatch("multinomial: counts must be nonnegative");
        }
        sum += c;
    }
    if (sum != n) {
        throw SumMismatch("multinomial: counts must sum to n");
    }
    BigInt r = factorial(n);
    for (int c : counts) {
        r /= factorial(c);
    }
    return r;
}

std::vector<BigInt> gaussian_binomial(int a, int b) {
    if (a < 0) {
        throw NegativeUpperIndex("gaussian_binomial: upper index must be >= 0");
    }
    if (b < 0 || b > a) {
        return {};
    }
    // Pascal-style recurrence on coefficient vectors:
    //   binom(i, j)_q = binom(i-1, j)_q + q^(i-j) * binom(i-1, j-1)_q
    // Rolling over j keeps a single row of polynomials.
    std::vector<std::vector<BigInt>> row(static_cast<size_t>(b) + 1);
    row[0] = {BigInt(1)};
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) {
            const int shift = i - j;
            std::vector<BigInt> next = (j == i) ? std::vector<BigInt>{} : row[j];
            const auto &prev = row[j - 1];
            if (next.size() < prev.size() + shift) {
                next.resize(prev.size() + shift, 0);
            }
            for (size_t e = 0; e < prev.size(); ++e) {
                next[e + shift] += prev[e];
            }
            row[j] = std::move(next);
        }
    }
    return row[b];
}

SqrtRational::SqrtRational(BigRational r) : squared_(std::move(r)) {
    if (squared_ < 0) {
        throw Error("SqrtRational: radicand must be >= 0");
    }
}

SqrtRational::SqrtRational(const BigInt &num, const BigInt &den)
    : SqrtRational(BigRational(num, den)) {}

double SqrtRational::to_double() const {
    HighFloat wide = HighFloat(numerator(squared_)) / HighFloat(denominator(squared_));
    return sqrt(wide).convert_to<double>();
}

SqrtRational SqrtRational::operator*(const SqrtRational &other) const {
    return SqrtRational(squared_ * other.squared_);
}

double rational_to_double(const BigRational &r) {
    HighFloat wide = HighFloat(numerator(r)) / HighFloat(denominator(r));
    return wide.convert_to<double>();
}

} // namespace dicke
