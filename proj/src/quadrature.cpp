// SPDX-License-Identifier: Apache-2.0
//
// nearcrb - Cramér-Rao bounds for near-field terminal positioning
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nearcrb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace nearcrb {

namespace {

struct NodeSet {
    std::vector<double> x, w;
};

// Newton iteration on Legendre polynomials from Chebyshev initial guesses.
NodeSet compute_gauss(int n) {
    NodeSet ns;
    ns.x.resize(n);
    ns.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        ns.x[i] = -x;
        ns.w[i] = w;
        ns.x[n - 1 - i] = x;
        ns.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) ns.x[n / 2] = 0.0;
    return ns;
}

const NodeSet& cached_gauss(int order) {
    static std::map<int, NodeSet> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
    return it->second;
}

struct PanelEvaluator {
    const std::function<double(double, double)>& f;
    const NodeSet& ns;
    long evals = 0;

    double eval(double ua, double ub, double va, double vb) {
        const double cu = 0.5 * (ua + ub), hu = 0.5 * (ub - ua);
        const double cv = 0.5 * (va + vb), hv = 0.5 * (vb - va);
        double sum = 0.0;
        const int n = static_cast<int>(ns.x.size());
        for (int i = 0; i < n; ++i) {
            const double u = cu + hu * ns.x[i];
            double row = 0.0;
            for (int j = 0; j < n; ++j) {
                const double v = cv + hv * ns.x[j];
                const double fv = f(u, v);
                if (!std::isfinite(fv)) {
                    std::ostringstream os;
                    os << "non-finite integrand sample at (" << u << ", " << v << ")";
                    throw std::runtime_error(os.str());
                }
                row += ns.w[j] * fv;
            }
            sum += ns.w[i] * row;
        }
        evals += static_cast<long>(n) * n;
        return sum * hu * hv;
    }

    // Bisect until the 2x2-child refinement changes the panel by less than its
    // error budget; children inherit a quarter of the budget each. A panel
    // whose change is already at round-off relative to its own mass stops
    // regardless, which keeps exact-cancellation integrands (odd parities)
    // from refining without bound.
    double refine(double ua, double ub, double va, double vb, double coarse, double budget,
                  int depth, int max_depth, double& err_acc) {
        const double um = 0.5 * (ua + ub), vm = 0.5 * (va + vb);
        const double c00 = eval(ua, um, va, vm);
        const double c10 = eval(um, ub, va, vm);
        const double c01 = eval(ua, um, vm, vb);
        const double c11 = eval(um, ub, vm, vb);
        const double fine = c00 + c10 + c01 + c11;
        const double delta = std::abs(fine - coarse);
        const double mass = std::abs(c00) + std::abs(c10) + std::abs(c01) + std::abs(c11);
        if (delta <= std::max(budget, 1e-14 * mass) || depth >= max_depth) {
            err_acc += delta;
            return fine;
        }
        const double b = 0.25 * budget;
        double out = 0.0;
        out += refine(ua, um, va, vm, c00, b, depth + 1, max_depth, err_acc);
        out += refine(um, ub, va, vm, c10, b, depth + 1, max_depth, err_acc);
        out += refine(ua, um, vm, vb, c01, b, depth + 1, max_depth, err_acc);
        out += refine(um, ub, vm, vb, c11, b, depth + 1, max_depth, err_acc);
        return out;
    }
};

double riemann_2d(const std::function<double(double, double)>& f, const RectDomain& dom,
                  int cells, long& evals) {
    const double hu = (dom.u_max - dom.u_min) / cells;
    const double hv = (dom.v_max - dom.v_min) / cells;
    double sum = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double u = dom.u_min + (i + 0.5) * hu;
        for (int j = 0; j < cells; ++j) {
            const double v = dom.v_min + (j + 0.5) * hv;
            const double fv = f(u, v);
            if (!std::isfinite(fv)) throw std::runtime_error("non-finite integrand sample");
            sum += fv;
        }
    }
    evals += static_cast<long>(cells) * cells;
    return sum * hu * hv;
}

}  // namespace

const std::vector<double>& gauss_nodes(int order) { return cached_gauss(order).x; }
const std::vector<double>& gauss_weights(int order) { return cached_gauss(order).w; }

IntegralResult integrate_2d(const std::function<double(double, double)>& f,
                            const RectDomain& dom, const QuadratureSpec& spec) {
    spec.validate();
    IntegralResult res;
    if (spec.rule == QuadratureRule::RiemannMidpoint) {
        res.value = riemann_2d(f, dom, spec.order, res.evaluations);
        const double coarse = riemann_2d(f, dom, std::max(1, spec.order / 2), res.evaluations);
        res.error_estimate = std::abs(res.value - coarse);
        return res;
    }

    PanelEvaluator pe{f, cached_gauss(spec.order), 0};
    const int p = spec.panels;
    std::vector<double> coarse(static_cast<size_t>(p) * p);
    double total0 = 0.0, mass0 = 0.0;
    const double du = (dom.u_max - dom.u_min) / p;
    const double dv = (dom.v_max - dom.v_min) / p;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const double c = pe.eval(dom.u_min + i * du, dom.u_min + (i + 1) * du,
                                     dom.v_min + j * dv, dom.v_min + (j + 1) * dv);
            coarse[static_cast<size_t>(i) * p + j] = c;
            total0 += c;
            mass0 += std::abs(c);
        }
    // The tolerance is taken relative to the unsigned panel mass so that
    // integrals that cancel to zero by parity terminate with an absolute
    // error of rel_tol times the cancelling magnitude.
    const double scale = std::max(mass0, 1e-300);
    const double budget = spec.rel_tol * scale / (static_cast<double>(p) * p);

    double total = 0.0, err = 0.0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            total += pe.refine(dom.u_min + i * du, dom.u_min + (i + 1) * du,
                               dom.v_min + j * dv, dom.v_min + (j + 1) * dv,
                               coarse[static_cast<size_t>(i) * p + j], budget, 0,
                               spec.max_depth, err);
    res.value = total;
    res.error_estimate = err;
    res.evaluations = pe.evals;
    return res;
}

ComplexIntegralResult integrate_2d_complex(
    const std::function<std::complex<double>(double, double)>& f, const RectDomain& dom,
    const QuadratureSpec& spec) {
    const auto re = integrate_2d([&](double u, double v) { return f(u, v).real(); }, dom, spec);
    const auto im = integrate_2d([&](double u, double v) { return f(u, v).imag(); }, dom, spec);
    return {{re.value, im.value}, re.error_estimate + im.error_estimate};
}

std::vector<GridCell> riemann_grid(const RectDomain& dom, int cells_per_axis) {
    if (cells_per_axis < 1) throw std::invalid_argument("cell count must be positive");
    const int n = cells_per_axis;
    const double hu = (dom.u_max - dom.u_min) / n;
    const double hv = (dom.v_max - dom.v_min) / n;
    std::vector<GridCell> cells;
    cells.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cells.push_back({dom.u_min + (i + 0.5) * hu, dom.v_min + (j + 0.5) * hv, hu * hv});
    return cells;
}

int checked_odd_sqrt(long alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be positive");
    const long n = std::lround(std::sqrt(static_cast<double>(alpha)));
    if (n * n != alpha || n % 2 == 0)
        throw std::invalid_argument("sqrt(alpha) must be a positive odd integer");
    return static_cast<int>(n);
}

std::vector<GridCell> riemann_grid(const SurfaceGeometry& geom, long alpha) {
    const int n = checked_odd_sqrt(alpha);
    const double step = geom.diagonal / std::sqrt(2.0 * static_cast<double>(alpha));
    const double cell_area = geom.area() / static_cast<double>(alpha);
    std::vector<GridCell> cells;
    cells.reserve(static_cast<size_t>(alpha));
    // Centers h*(i - (n+1)/2) are exactly symmetric about zero, which the
    // center-line cancellation arguments rely on.
    for (int i = 1; i <= n; ++i) {
        const double x = step * (i - 0.5 * (n + 1));
        for (int j = 1; j <= n; ++j) {
            const double y = step * (j - 0.5 * (n + 1));
            cells.push_back({x, y, cell_area});
        }
    }
    return cells;
}

}  // namespace nearcrb
