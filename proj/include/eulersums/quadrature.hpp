#pragma once

// Quadrature rules used by the remainder integrals and the Hankel check.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace eulersums::quad {

/// Gauss-Legendre nodes and weights on [0, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [0, 1]. Nodes come from Newton
/// iteration on P_n; rules are cached per n. n must be >= 1.
const Rule& gauss_legendre_unit(std::size_t n);

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Composite Gauss-Legendre over [a, b] with `panels` equal panels, compared
/// against the same rule with twice the nodes; error = |difference|.
Estimate gauss_legendre(const std::function<double(double)>& f, double a, double b, std::size_t nodes,
                        std::size_t panels = 1);

/// Tanh-sinh on [a, b], halving the step until successive levels agree to
/// `tol` (absolute) or `max_level` is reached. Tolerates integrable endpoint
/// singularities; f is never evaluated exactly at a or b. f receives the
/// abscissa and its distance to the nearer endpoint, so integrands with an
/// endpoint singularity can avoid cancellation.
Estimate tanh_sinh(const std::function<double(double x, double dist)>& f, double a, double b, double tol,
                   int max_level = 10);

}  // namespace eulersums::quad
