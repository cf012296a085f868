#pragma once

#include <iosfwd>
#include <vector>

#include "dicke/dicke_states.hpp"

namespace dicke {

/// One Schmidt weight: lambda_j = binom(2sl,j) binom(2s(n-l),k-j) / binom(2sn,k),
/// kept exact alongside its float image.
struct SchmidtWeight {
    int j;
    BigRational lambda;
    double value;
};

/// Bipartite entanglement data of a spin-s Dicke state for the cut into the
/// low l sites and the high n-l sites.
struct EntropyReport {
    DickeSpec spec;
    int l;
    std::vector<SchmidtWeight> lambdas;
    double entropy_exact;    // base-(2s+1) digits
    BigRational sigma2;      // k(2sn-k)l(n-l) / (2s n^3), exact
    double sigma2_value;
    bool gaussian_defined;   // false iff sigma2 = 0 (k in {0, 2sn})
    double entropy_gaussian; // 0.5 log_{2s+1}(2 pi e sigma2); NaN if undefined
    double mean_j;           // kl/n
};

/// Schmidt weights over j = max(0, k-2s(n-l)) ... min(k, 2sl).
std::vector<SchmidtWeight> schmidt_lambdas(const DickeSpec &spec, int l);

/// Von Neumann entropy -sum lambda log_{2s+1} lambda with 0 log 0 := 0.
/// The float weights are summed in ascending order so states related by the
/// k -> 2sn-k and l -> n-l symmetries produce bit-identical results.
double entropy_exact(const DickeSpec &spec, int l);

/// Exact variance of the Gaussian approximation to the weight profile.
BigRational variance_sigma2(const DickeSpec &spec, int l);

/// Full report; throws DegenerateVariance only through report.gaussian_defined
/// consumers that require it (the report itself marks the case instead).
EntropyReport entropy_report(const DickeSpec &spec, int l);

/// Gaussian-approximated entropy; throws DegenerateVariance when sigma2 = 0.
double entropy_gaussian(const DickeSpec &spec, int l);

/// Rebuilds the state as sum_j sqrt(lambda_j) |D_{n-l,k-j}> (x) |D_{l,j}>.
StateVector schmidt_reconstruct(const DickeSpec &spec, int l);

/// CSV rows "s2,n,k,l,S_exact,sigma2,S_gauss"; header included once.
void write_entropy_csv_header(std::ostream &os);
void write_entropy_csv_row(std::ostream &os, const EntropyReport &report, double log_base_scale = 1.0);

} // namespace dicke
