#pragma once

#include <utility>
#include <vector>

namespace derivsamp {

/// n-point Gauss-Legendre nodes and weights on [0, 1]; exact for degree 2n - 1.
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int n);

}  // namespace derivsamp
