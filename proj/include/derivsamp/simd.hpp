#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace derivsamp::simd {

enum class Isa { scalar, avx2 };

/// Chosen once from cpuid; DERIVSAMP_ISA=scalar forces the reference path.
[[nodiscard]] Isa active_isa();
[[nodiscard]] bool isa_available(Isa isa);
[[nodiscard]] std::string_view isa_name(Isa isa);

/// Overrides the dispatch for the lifetime of the guard (tests only; not thread-safe).
class ScopedIsa {
public:
    explicit ScopedIsa(Isa isa);
    ~ScopedIsa();
    ScopedIsa(const ScopedIsa&) = delete;
    ScopedIsa& operator=(const ScopedIsa&) = delete;

private:
    Isa saved_;
};

/// Piecewise polynomial table as consumed by the kernels.
struct PieceTable {
    const double* coeffs;  ///< pieces * order values, ascending powers
    int order;
    long first;
    long pieces;
};

/// out[n] = P(scale * x[n]), zero outside [first, first + pieces).
void eval_pieces(const PieceTable& table, std::span<const double> x, std::span<double> out, double scale);

/// max over i < count of |sum_j w[j] * f[i + j * stride]|.
[[nodiscard]] double max_abs_weighted_diff(std::span<const double> f, std::span<const double> w,
                                           std::size_t stride, std::size_t count);

/// sum_n w[n] * (a[n] - b[n])^2
[[nodiscard]] double weighted_sq_diff(std::span<const double> a, std::span<const double> b,
                                      std::span<const double> w);

namespace scalar {
void eval_pieces(const PieceTable& table, std::span<const double> x, std::span<double> out, double scale);
double max_abs_weighted_diff(std::span<const double> f, std::span<const double> w, std::size_t stride,
                             std::size_t count);
double weighted_sq_diff(std::span<const double> a, std::span<const double> b, std::span<const double> w);
}  // namespace scalar

namespace avx2 {
void eval_pieces(const PieceTable& table, std::span<const double> x, std::span<double> out, double scale);
double max_abs_weighted_diff(std::span<const double> f, std::span<const double> w, std::size_t stride,
                             std::size_t count);
double weighted_sq_diff(std::span<const double> a, std::span<const double> b, std::span<const double> w);
}  // namespace avx2

}  // namespace derivsamp::simd
