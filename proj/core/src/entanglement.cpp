#include "dicke/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace dicke {

namespace {

void check_partition(const DickeSpec &spec, int l) {
    if (l < 1 || l >= spec.n) {
        throw PartitionOutOfRange("partition size l must satisfy 1 <= l < n");
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::vector<SchmidtWeight> schmidt_lambdas(const DickeSpec &spec, int l) {
    check_partition(spec, l);
    const int j_lo = std::max(0, spec.k - spec.s2 * (spec.n - l));
    const int j_hi = std::min(spec.k, spec.s2 * l);
    const BigInt total = binomial(spec.max_k(), spec.k);
    std::vector<SchmidtWeight> out;
    out.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (int j = j_lo; j <= j_hi; ++j) {
        BigRational lambda(binomial(spec.s2 * l, j) * binomial(spec.s2 * (spec.n - l), spec.k - j), total);
        const double value = rational_to_double(lambda);
        out.push_back(SchmidtWeight{j, std::move(lambda), value});
    }
    return out;
}

double entropy_exact(const DickeSpec &spec, int l) {
    const auto weights = schmidt_lambdas(spec, l);
    std::vector<double> values;
    values.reserve(weights.size());
    for (const auto &w : weights) {
        values.push_back(w.value);
    }
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) {
        if (v > 0.0) {
            s -= v * std::log(v);
        }
    }
    return s / std::log(static_cast<double>(spec.d()));
}

BigRational variance_sigma2(const DickeSpec &spec, int l) {
    check_partition(spec, l);
    const BigInt n_big = spec.n;
    BigInt num = BigInt(spec.k) * (spec.s2 * n_big - spec.k) * l * (spec.n - l);
    BigInt den = BigInt(spec.s2) * n_big * n_big * n_big;
    return BigRational(num, den);
}

EntropyReport entropy_report(const DickeSpec &spec, int l) {
    EntropyReport report{spec, l, schmidt_lambdas(spec, l), 0.0, BigRational(0), 0.0, false, 0.0, 0.0};
    report.entropy_exact = entropy_exact(spec, l);
    report.sigma2 = variance_sigma2(spec, l);
    report.sigma2_value = rational_to_double(report.sigma2);
    report.mean_j = static_cast<double>(spec.k) * l / spec.n;
    report.gaussian_defined = (report.sigma2 != 0);
    if (report.gaussian_defined) {
        report.entropy_gaussian =
            0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * report.sigma2_value) /
            std::log(static_cast<double>(spec.d()));
    } else {
        report.entropy_gaussian = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

double entropy_gaussian(const DickeSpec &spec, int l) {
    const EntropyReport report = entropy_report(spec, l);
    if (!report.gaussian_defined) {
        throw DegenerateVariance("entropy_gaussian: sigma^2 = 0 for k in {0, 2sn}");
    }
    return report.entropy_gaussian;
}

StateVector schmidt_reconstruct(const DickeSpec &spec, int l) {
    check_partition(spec, l);
    StateVector state(spec.d(), spec.n);
    for (const SchmidtWeight &w : schmidt_lambdas(spec, l)) {
        const StateVector left = closed_form_state(DickeSpec(spec.s2, spec.n - l, spec.k - w.j));
        const StateVector right = closed_form_state(DickeSpec(spec.s2, l, w.j));
        const StateVector product = tensor(left, right);
        const double coeff = SqrtRational(w.lambda).to_double();
        for (std::size_t i = 0; i < state.size(); ++i) {
            state[i] += coeff * product[i];
        }
    }
    return state;
}

void write_entropy_csv_header(std::ostream &os) {
    os << "s2,n,k,l,S_exact,sigma2,S_gauss\n";
}

void write_entropy_csv_row(std::ostream &os, const EntropyReport &report, double log_base_scale) {
    os << report.spec.s2 << ',' << report.spec.n << ',' << report.spec.k << ',' << report.l << ','
       << format_double(report.entropy_exact * log_base_scale) << ','
       << format_double(report.sigma2_value) << ',';
    if (report.gaussian_defined) {
        os << format_double(report.entropy_gaussian * log_base_scale);
    } else {
        os << "nan";
    }
    os << '\n';
}

} // namespace dicke
