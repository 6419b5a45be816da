// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the library's FFT path: plain O(K^2) summation only.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "efd/signal.hpp"

namespace oracle {

using cplx = std::complex<double>;

// X[k] = (1/K) sum_n x[n] exp(-j 2 pi k n / K)
inline std::vector<cplx> naive_dft(const std::vector<double>& x) {
    const std::size_t k = x.size();
    std::vector<cplx> out(k);
    for (std::size_t ki = 0; ki < k; ++ki) {
        cplx acc(0.0, 0.0);
        for (std::size_t n = 0; n < k; ++n) {
            const double a = -2.0 * M_PI * static_cast<double>(ki) * static_cast<double>(n) /
                             static_cast<double>(k);
            acc += x[n] * cplx(std::cos(a), std::sin(a));
        }
        out[ki] = acc / static_cast<double>(k);
    }
    return out;
}

// x[n] = sum_k X[k] exp(j 2 pi k n / K)
inline std::vector<cplx> naive_idft(const std::vector<cplx>& X) {
    const std::size_t k = X.size();
    std::vector<cplx> out(k);
    for (std::size_t n = 0; n < k; ++n) {
        cplx acc(0.0, 0.0);
        for (std::size_t ki = 0; ki < k; ++ki) {
            const double a = 2.0 * M_PI * static_cast<double>(ki) * static_cast<double>(n) /
                             static_cast<double>(k);
            acc += X[ki] * cplx(std::cos(a), std::sin(a));
        }
        out[n] = acc;
    }
    return out;
}

// Hilbert pair through the sign-multiplier route: h = IDFT( -j sgn(k) X ),
// analytic = x + j h. sgn is +1 on bins 1..K/2-1, -1 on K/2+1..K-1, 0 at the
// two real bins.
inline std::vector<cplx> naive_analytic(const std::vector<double>& x) {
    const std::size_t k = x.size();
    std::vector<cplx> X = naive_dft(x);
    std::vector<cplx> H(k);
    for (std::size_t ki = 0; ki < k; ++ki) {
        if (ki >= 1 && ki < k / 2)
            H[ki] = cplx(0.0, -1.0) * X[ki];
        else if (ki > k / 2)
            H[ki] = cplx(0.0, 1.0) * X[ki];
        else
            H[ki] = cplx(0.0, 0.0);
    }
    std::vector<cplx> h = naive_idft(H);
    std::vector<cplx> out(k);
    for (std::size_t n = 0; n < k; ++n) out[n] = cplx(x[n], h[n].real());
    return out;
}

// Direct term-by-term evaluation of the banded analytic partial sum,
// 2 Re{ sum_{k in [lo, hi)} X[k] exp(j 2 pi k n / K) }.
inline std::vector<double> direct_band_sum(const std::vector<cplx>& X, std::size_t lo,
                                           std::size_t hi) {
    const std::size_t k = X.size();
    std::vector<double> out(k, 0.0);
    for (std::size_t n = 0; n < k; ++n) {
        cplx acc(0.0, 0.0);
        for (std::size_t ki = lo; ki < hi; ++ki) {
            const double a = 2.0 * M_PI * static_cast<double>(ki) * static_cast<double>(n) /
                             static_cast<double>(k);
            acc += X[ki] * cplx(std::cos(a), std::sin(a));
        }
        out[n] = 2.0 * acc.real();
    }
    return out;
}

inline std::vector<double> random_signal(std::size_t k, std::uint32_t seed) {
    std::mt19937 eng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(k);
    for (auto& v : x) v = dist(eng);
    return x;
}

inline double max_abs(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace oracle
