#pragma once

// Test-only eigenvalue oracle: cyclic Jacobi rotations on a dense symmetric
// matrix. Kept independent of the library's power iteration so the two can
// cross-check each other.

#include <cmath>
#include <vector>

#include "spex/graph.hpp"

namespace spex::testing {

inline std::vector<std::vector<double>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<double>> a(g.n(), std::vector<double>(g.n(), 0.0));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj(u)) a[u][v] = 1.0;
    return a;
}

inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

inline double jacobi_max_eigenvalue(const Graph& g) {
    double best = -1e300;
    for (double e : jacobi_eigenvalues(adjacency_matrix(g)))
        if (e > best) best = e;
    return best;
}

}  // namespace spex::testing
