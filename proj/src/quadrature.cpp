#include "derivsamp/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace derivsamp {

using std::numbers::pi;

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int n) {
    std::vector<double> x(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[static_cast<size_t>(i)] = 0.5 * (1.0 - z);
        w[static_cast<size_t>(i)] = 1.0 / ((1.0 - z * z) * dp * dp);
    }
    return {x, w};
}


}  // namespace derivsamp
