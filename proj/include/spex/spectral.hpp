#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spex/graph.hpp"
#include "spex/poly.hpp"

namespace spex {

struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> vector;  // unit Euclidean norm; zero off the maximizing component
    double residual = 0.0;       // max_v |lambda x_v - sum_{u~v} x_u|
    long iterations = 0;
    bool connected = false;
};

struct PowerOptions {
    double tol = 1e-12;
    long max_iterations = 1'000'000;
};

/// Thrown when the power iteration fails to reach the tolerance within the
/// iteration cap; carries the best iterate found.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(SpectralResult best_iterate, const std::string& what)
        : std::runtime_error(what), best(std::move(best_iterate)) {}
    SpectralResult best;
};

/// Largest adjacency eigenvalue. Disconnected graphs are solved per
/// component and the maximizing component's eigenvector is reported (zero
/// elsewhere). Power iteration on A + (max degree) I with deterministic
/// all-ones start.
SpectralResult spectral_radius(const Graph& g, const PowerOptions& opts = {});

/// Perron vector of a connected graph: strictly positive unit eigenvector
/// for the spectral radius. Rejects disconnected input.
SpectralResult perron_vector(const Graph& g, const PowerOptions& opts = {});

/// |lambda - sum_{uv in E} 2 x_u x_v|, the quadratic-form identity deviation.
double quadratic_form_check(const Graph& g, const SpectralResult& r);

double eigen_residual(const Graph& g, double lambda, std::span<const double> x);

/// Largest real root of p, to 1e-12 absolute. Brackets by a descending sign
/// scan over [0, 1 + max|a_i/a_d|] (Cauchy bound), then bisection with a
/// Newton polish. Throws std::domain_error when the scan finds no sign
/// change.
double largest_real_root(const Poly& p,
                         std::optional<std::pair<double, double>> bracket_hint = {});

}  // namespace spex
