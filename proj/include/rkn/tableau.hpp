#pragma once

#include <cstddef>
#include <vector>

namespace rkn {

/// Coefficient table of an explicit m-stage Nystrom method for u'' = f(t, u).
///
/// Stage values are g_i = u + c_i*h*v + h^2 * sum_{j<i} a[i][j] * f_j with
/// f_i = f(t + c_i*h, g_i); positions advance with weights b, velocities
/// with weights b_hat. Explicitness requires a to be strictly lower
/// triangular; the node vector starts at 0 and ends at 1.
struct NystromTableau {
    int m = 0;                  ///< stage count (>= 2)
    std::vector<double> c;      ///< nodes, length m; c.front()==0, c.back()==1
    std::vector<double> a;      ///< m*m stage coefficients, row-major
    std::vector<double> b;      ///< position weights, length m
    std::vector<double> b_hat;  ///< velocity weights, length m

    double a_at(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
    double& a_at(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }

    /// Throws Error unless all sizes match m, a is strictly lower
    /// triangular, c starts at 0 and ends at 1, and every entry is finite.
    void validate() const;
};

}  // namespace rkn
