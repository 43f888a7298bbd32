// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace gwp {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 20000;

// Taylor coefficients of 1/Gamma(x) about 0: 1/Gamma(x) = sum_{k>=1} c_k x^k.
constexpr std::array<double, 30> kRecipGamma = {
    0.0,
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
};

struct TemmeGammas {
    double gam1;   // (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
    double gam2;   // (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
    double gampl;  // 1/Gamma(1+mu)
    double gammi;  // 1/Gamma(1-mu)
};

// |mu| <= 1/2. Evaluated from the 1/Gamma series so gam1 has no cancellation
// as mu -> 0.
TemmeGammas temme_gammas(double mu) {
    double even = 0.0;  // sum over even k of c_k mu^(k-2)
    double odd = 0.0;   // sum over odd k of c_k mu^(k-1)
    for (std::size_t k = kRecipGamma.size() - 1; k >= 1; --k) {
        if (k % 2 == 0) {
            even = even * mu * mu + kRecipGamma[k];
        } else {
            odd = odd * mu * mu + kRecipGamma[k];
        }
    }
    TemmeGammas g{};
    g.gam1 = -even;
    g.gam2 = odd;
    g.gampl = g.gam2 - mu * g.gam1;
    g.gammi = g.gam2 + mu * g.gam1;
    return g;
}

Complex sinhc(Complex e) {
    if (std::abs(e) < 1e-3) {
        const Complex e2 = e * e;
        return 1.0 + e2 / 6.0 * (1.0 + e2 / 20.0 * (1.0 + e2 / 42.0));
    }
    return std::sinh(e) / e;
}

// K_mu(z), K_{mu+1}(z) by Temme's series, |mu| <= 1/2, |z| small.
std::pair<Complex, Complex> temme_series(double mu, Complex z) {
    const Complex x2 = 0.5 * z;
    const double pimu = pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const Complex d = -std::log(x2);
    const Complex e = mu * d;
    const Complex fact2 = sinhc(e);
    const TemmeGammas g = temme_gammas(mu);

    Complex ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    Complex sum = ff;
    const Complex ee = std::exp(e);
    Complex p = 0.5 * ee / g.gampl;
    Complex q = 0.5 / (ee * g.gammi);
    Complex c = 1.0;
    const Complex dd = x2 * x2;
    Complex sum1 = p;
    const double mu2 = mu * mu;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        const double di = i;
        ff = (di * ff + p + q) / (di * di - mu2);
        c *= dd / di;
        p /= (di - mu);
        q /= (di + mu);
        const Complex del = c * ff;
        sum += del;
        sum1 += c * (p - di * ff);
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw NonConvergence("bessel_k: Temme series did not converge");
    return {sum, sum1 * 2.0 / z};
}

// exp(z) K_mu(z), exp(z) K_{mu+1}(z) by Steed's continued fraction,
// |mu| <= 1/2, Re z > 0.
std::pair<Complex, Complex> steed_cf2_scaled(double mu, Complex z) {
    const double mu2 = mu * mu;
    Complex b = 2.0 * (1.0 + z);
    Complex d = 1.0 / b;
    Complex h = d;
    Complex delh = d;
    Complex q1 = 0.0;
    Complex q2 = 1.0;
    const double a1 = 0.25 - mu2;
    Complex q = a1;
    double c = a1;
    double a = -a1;
    Complex s = 1.0 + q * delh;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const Complex qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const Complex dels = q * delh;
        s += dels;
        if (std::abs(dels) < std::abs(s) * kEps) break;
    }
    if (i > kMaxIter) throw NonConvergence("bessel_k: continued fraction did not converge");
    h = a1 * h;
    const Complex kmu = std::sqrt(pi / (2.0 * z)) / s;
    const Complex k1 = kmu * (mu + z + 0.5 - h) / z;
    return {kmu, k1};
}

// exp(z) K_nu(z) by the Hankel expansion, truncated at the smallest term.
Complex hankel_asymptotic_scaled(double nu, Complex z) {
    const double mu4 = 4.0 * nu * nu;
    Complex term = 1.0;
    Complex sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        const Complex next = term * (mu4 - odd * odd) / (8.0 * k * z);
        const double mag = std::abs(next);
        if (mag == 0.0) break;
        // Past the smallest term the remainder grows; stop before it does.
        if (k > 12 && mag > prev) break;
        term = next;
        sum += term;
        prev = mag;
        if (mag < kEps * std::abs(sum)) break;
    }
    return std::sqrt(pi / (2.0 * z)) * sum;
}

// exp(z) K_{n+1/2}(z) from the terminating series.
Complex half_integer_scaled(int n, Complex z) {
    Complex sum = 0.0;
    Complex inv2z_pow = 1.0;
    const Complex inv2z = 1.0 / (2.0 * z);
    // (n+k)! / (k! (n-k)!) built incrementally.
    double coef = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            coef *= static_cast<double>((n + k) * (n - k + 1)) / k;
            inv2z_pow *= inv2z;
        }
        sum += coef * inv2z_pow;
    }
    return std::sqrt(pi / (2.0 * z)) * sum;
}

bool is_half_integer(double nu, int& n) {
    const double twice = 2.0 * nu;
    const double r = std::round(twice);
    if (twice != r) return false;
    const long long ir = static_cast<long long>(r);
    if (ir % 2 == 0 || ir > 2001) return false;
    n = static_cast<int>((ir - 1) / 2);
    return true;
}

void check_domain(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(z.real() > 0.0)) {
        throw std::domain_error("bessel_k: requires finite z with Re z > 0, got (" +
                                std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    }
}

// Returns exp(z) K_nu(z); nu >= 0.
Complex k_scaled_nonneg(double nu, Complex z) {
    int n = 0;
    if (is_half_integer(nu, n)) return half_integer_scaled(n, z);

    const double az = std::abs(z);
    if (az > 25.0 && az > 0.5 * nu * nu) return hankel_asymptotic_scaled(nu, z);

    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    Complex kmu;
    Complex k1;
    if (az <= 2.0) {
        auto [a, b] = temme_series(mu, z);
        const Complex ez = std::exp(z);
        kmu = a * ez;
        k1 = b * ez;
    } else {
        std::tie(kmu, k1) = steed_cf2_scaled(mu, z);
    }
    const Complex two_over_z = 2.0 / z;
    for (int i = 1; i <= nl; ++i) {
        const Complex next = (mu + i) * two_over_z * k1 + kmu;
        kmu = k1;
        k1 = next;
    }
    return kmu;
}

void check_result(Complex v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::overflow_error("bessel_k: result not representable in double precision");
    }
}

}  // namespace

Complex sqrt_pos_re(Complex z) {
    if (z == Complex(0.0, 0.0)) return 0.0;
    Complex r = std::sqrt(z);
    if (r.real() < 0.0) r = -r;
    return r;
}

Complex bessel_k_scaled(double nu, Complex z) {
    check_domain(z);
    const Complex v = k_scaled_nonneg(std::abs(nu), z);
    check_result(v);
    return v;
}

Complex bessel_k(double nu, Complex z) {
    check_domain(z);
    const Complex v = k_scaled_nonneg(std::abs(nu), z) * std::exp(-z);
    check_result(v);
    return v;
}

}  // namespace gwp
