// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwp/types.hpp"

namespace gwp {

namespace {

constexpr double kStep0 = 0.5;
constexpr double kMinRange = 3.0;
constexpr double kMaxRange = 40.0;
constexpr int kMaxLevel = 12;
constexpr int kQuietNodes = 3;

struct Mapping {
    std::function<double(double)> x;
    std::function<double(double)> jac;
};

// Integrand writing values and the magnitudes that serve as the convergence
// reference (|value| for plain integrands, inner magnitude integrals for
// iterated ones).
using RefIntegrand = std::function<void(double x, std::vector<double>& value, std::vector<double>& magnitude)>;

RefIntegrand with_abs(const LineIntegrand& f) {
    return [&f](double x, std::vector<double>& v, std::vector<double>& m) {
        f(x, v);
        for (std::size_t i = 0; i < v.size(); ++i) m[i] = std::abs(v[i]);
    };
}

class MappedTrapezoid {
public:
    MappedTrapezoid(RefIntegrand f, std::size_t n, Mapping map)
        : f_(std::move(f)), n_(n), map_(std::move(map)), buf_(n), mbuf_(n) {}

    QuadratureResult run(double tol) {
        QuadratureResult res;
        std::vector<double> sum(n_, 0.0);
        std::vector<double> mag(n_, 0.0);
        add_node(0.0, sum, mag);
        const int right = extend(+1, sum, mag, tol);
        const int left = extend(-1, sum, mag, tol);
        range_ = std::max(left, right) * kStep0;
        double h = kStep0;
        std::vector<double> prev = scaled(sum, h);
        for (int level = 1; level <= kMaxLevel; ++level) {
            h *= 0.5;
            const long long count = static_cast<long long>(left + right) << (level - 1);
            const double u0 = -left * kStep0 + h;
            for (long long i = 0; i < count; ++i) add_node(u0 + 2.0 * h * static_cast<double>(i), sum, mag);
            std::vector<double> cur = scaled(sum, h);
            double worst = 0.0;
            worst_c_ = 0;
            for (std::size_t c = 0; c < n_; ++c) {
                const double m = mag[c] * h;
                if (m > 0.0 && std::abs(cur[c] - prev[c]) / m > worst) {
                    worst = std::abs(cur[c] - prev[c]) / m;
                    worst_c_ = c;
                }
            }
            last_worst_ = worst;
            prev = std::move(cur);
            if (level >= 2 && worst <= tol) {
                res.value = prev;
                res.magnitude = scaled(mag, h);
                res.rel_change = worst;
                res.evaluations = evaluations_;
                return res;
            }
        }
        throw NonConvergence("quadrature: trapezoid refinement did not converge (component " + std::to_string(worst_c_) +
                             ", relative change " + std::to_string(last_worst_) + ", range " + std::to_string(range_) + ")");
    }

private:
    // Adds nodes at multiples of the initial step on one side until the
    // integrand is negligible; returns the number of steps taken.
    int extend(int side, std::vector<double>& sum, std::vector<double>& mag, double tol) {
        int quiet = 0;
        int j = 1;
        for (;; ++j) {
            const double u = side * j * kStep0;
            const bool small = add_node(u, sum, mag, tol * 1e-3);
            quiet = small ? quiet + 1 : 0;
            if (std::abs(u) >= kMinRange && quiet >= kQuietNodes) break;
            if (std::abs(u) >= kMaxRange) break;
        }
        return j;
    }

    // Returns true when every component at this node is below rel * running magnitude.
    bool add_node(double u, std::vector<double>& sum, std::vector<double>& mag, double rel = 0.0) {
        const double x = map_.x(u);
        const double w = map_.jac(u);
        if (!std::isfinite(x) || !std::isfinite(w)) return true;
        std::fill(buf_.begin(), buf_.end(), 0.0);
        std::fill(mbuf_.begin(), mbuf_.end(), 0.0);
        f_(x, buf_, mbuf_);
        ++evaluations_;
        bool small = true;
        for (std::size_t c = 0; c < n_; ++c) {
            const double v = buf_[c] * w;
            const double m = mbuf_[c] * w;
            if (!std::isfinite(v)) throw NonConvergence("quadrature: integrand not finite at x = " + std::to_string(x));
            sum[c] += v;
            mag[c] += m;
            if (m > rel * mag[c]) small = false;
        }
        return small;
    }

    static std::vector<double> scaled(const std::vector<double>& v, double h) {
        std::vector<double> r(v);
        for (double& e : r) e *= h;
        return r;
    }

    RefIntegrand f_;
    std::size_t n_;
    Mapping map_;
    std::vector<double> buf_;
    std::vector<double> mbuf_;
    std::size_t evaluations_ = 0;
    std::size_t worst_c_ = 0;
    double last_worst_ = 0.0;
    double range_ = 0.0;
};

}  // namespace

QuadratureResult integrate_line(const LineIntegrand& f, std::size_t components, double center, double scale,
                                double tol) {
    Mapping m{[=](double u) { return center + scale * std::sinh(u); },
              [=](double u) { return scale * std::cosh(u); }};
    return MappedTrapezoid(with_abs(f), components, std::move(m)).run(tol);
}

QuadratureResult integrate_half_line(const LineIntegrand& f, std::size_t components, double scale, double tol) {
    Mapping m{[=](double u) { return scale * std::exp(u); }, [=](double u) { return scale * std::exp(u); }};
    return MappedTrapezoid(with_abs(f), components, std::move(m)).run(tol);
}

QuadratureResult integrate_plane(const PlaneIntegrand& f, std::size_t components, double cx, double sx, double cy,
                                 double sy, double tol) {
    std::size_t inner_evals = 0;
    double inner_worst = 0.0;
    RefIntegrand outer = [&](double x, std::vector<double>& out, std::vector<double>& mag) {
        LineIntegrand inner = [&](double y, std::vector<double>& o) { f(x, y, o); };
        QuadratureResult r = integrate_line(inner, components, cy, sy, 0.1 * tol);
        inner_evals += r.evaluations;
        inner_worst = std::max(inner_worst, r.rel_change);
        out = r.value;
        mag = r.magnitude;
    };
    Mapping m{[=](double u) { return cx + sx * std::sinh(u); }, [=](double u) { return sx * std::cosh(u); }};
    QuadratureResult res = MappedTrapezoid(outer, components, std::move(m)).run(tol);
    res.evaluations = inner_evals;
    res.rel_change = std::max(res.rel_change, inner_worst);
    return res;
}

}  // namespace gwp
