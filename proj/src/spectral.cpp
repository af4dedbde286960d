#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spex {

namespace {

// Power iteration on one connected graph. Returns the eigenpair in the
// component's own labeling.
SpectralResult solve_connected(const Graph& g, const PowerOptions& opts) {
    const int n = g.n();
    SpectralResult r;
    r.connected = true;
    if (n == 1) {
        r.vector = {1.0};
        return r;
    }
    int shift = 0;
    for (int v = 0; v < n; ++v) shift = std::max(shift, g.degree(v));

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    for (long iter = 1; iter <= opts.max_iterations; ++iter) {
        for (int v = 0; v < n; ++v) {
            double s = 0;
            for (int u : g.adj(v)) s += x[u];
            ax[v] = s;
        }
        double rayleigh = 0;
        for (int v = 0; v < n; ++v) rayleigh += x[v] * ax[v];
        double res = 0;
        for (int v = 0; v < n; ++v) res = std::max(res, std::fabs(ax[v] - rayleigh * x[v]));
        r.lambda = rayleigh;
        r.residual = res;
        r.iterations = iter;
        if (res <= opts.tol) {
            r.vector = x;
            return r;
        }
        double norm = 0;
        for (int v = 0; v < n; ++v) {
            ax[v] += shift * x[v];
            norm += ax[v] * ax[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = ax[v] / norm;
    }
    r.vector = x;
    throw ConvergenceError(r, "power iteration: residual " + std::to_string(r.residual) +
                                  " above tol after " + std::to_string(opts.max_iterations) +
                                  " iterations");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const PowerOptions& opts) {
    if (g.n() < 1) throw std::invalid_argument("spectral_radius: empty graph");
    if (opts.tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    auto comps = connected_components(g);

    SpectralResult best;
    best.lambda = -1;
    std::vector<int> best_labels;
    long total_iters = 0;
    for (VertexSet c : comps) {
        auto sub = induced_subgraph(g, c);
        SpectralResult r = solve_connected(sub.graph, opts);
        total_iters += r.iterations;
        if (r.lambda > best.lambda) {
            best = r;
            best_labels = sub.labels;
        }
    }
    std::vector<double> full(g.n(), 0.0);
    for (std::size_t i = 0; i < best_labels.size(); ++i) full[best_labels[i]] = best.vector[i];
    best.vector = std::move(full);
    best.iterations = total_iters;
    best.connected = comps.size() == 1;
    return best;
}

SpectralResult perron_vector(const Graph& g, const PowerOptions& opts) {
    if (!is_connected(g)) throw std::invalid_argument("perron_vector: graph not connected");
    return spectral_radius(g, opts);
}

double quadratic_form_check(const Graph& g, const SpectralResult& r) {
    double s = 0;
    for (auto [u, v] : g.edges()) s += 2.0 * r.vector[u] * r.vector[v];
    return std::fabs(r.lambda - s);
}

double eigen_residual(const Graph& g, double lambda, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("eigen_residual: vector length != n");
    double res = 0;
    for (int v = 0; v < g.n(); ++v) {
        double s = 0;
        for (int u : g.adj(v)) s += x[u];
        res = std::max(res, std::fabs(lambda * x[v] - s));
    }
    return res;
}

double largest_real_root(const Poly& p, std::optional<std::pair<double, double>> bracket_hint) {
    if (p.degree() < 1) throw std::domain_error("largest_real_root: degree < 1");
    auto c = p.coeffs_double();
    const double lead = c.back();
    double bound = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        bound = std::max(bound, std::fabs(c[i] / lead));
    bound += 1.0;

    auto f = [&](double x) { return p.eval(x); };

    double lo = 0, hi = 0;
    bool found = false;
    if (bracket_hint) {
        lo = bracket_hint->first;
        hi = bracket_hint->second;
        found = f(lo) == 0 || f(hi) == 0 || (f(lo) < 0) != (f(hi) < 0);
    }
    if (!found) {
        // descend from the Cauchy bound; the first sign change brackets the
        // largest root in [0, bound]
        const int steps = 8192;
        double prev_x = bound;
        double prev_f = f(bound);
        for (int i = 1; i <= steps && !found; ++i) {
            double x = bound * (steps - i) / steps;
            double fx = f(x);
            if (fx == 0 || (fx < 0) != (prev_f < 0)) {
                lo = x;
                hi = prev_x;
                found = true;
            }
            prev_x = x;
            prev_f = fx;
        }
    }
    if (!found)
        throw std::domain_error("largest_real_root: no sign change in [0, " +
                                std::to_string(bound) + "]");

    double flo = f(lo);
    if (flo == 0) return lo;
    if (f(hi) == 0) return hi;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    // Newton polish, guarded to stay inside the bracket
    double x = 0.5 * (lo + hi);
    Poly dp = p.derivative();
    for (int i = 0; i < 8; ++i) {
        double d = dp.eval(x);
        if (d == 0) break;
        double nx = x - f(x) / d;
        if (nx <= lo || nx >= hi) break;
        x = nx;
    }
    return x;
}

}  // namespace spex
