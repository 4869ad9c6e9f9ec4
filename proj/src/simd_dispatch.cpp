#include "derivsamp/simd.hpp"

#include "derivsamp/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace derivsamp::simd {

namespace {

bool cpu_has_avx2() {
#if defined(DERIVSAMP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect() {
    if (const char* env = std::getenv("DERIVSAMP_ISA"); env && std::string(env) == "scalar") return Isa::scalar;
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

ScopedIsa::ScopedIsa(Isa isa) : saved_(active_isa()) {
    if (!isa_available(isa)) throw InvalidArgument("instruction set not available on this machine");
    current().store(isa);
}

ScopedIsa::~ScopedIsa() { current().store(saved_); }

#if defined(DERIVSAMP_HAVE_AVX2)
#define DERIVSAMP_DISPATCH(fn, ...) \
    (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define DERIVSAMP_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void eval_pieces(const PieceTable& table, std::span<const double> x, std::span<double> out, double scale) {
    DERIVSAMP_DISPATCH(eval_pieces, table, x, out, scale);
}

double max_abs_weighted_diff(std::span<const double> f, std::span<const double> w, std::size_t stride,
                             std::size_t count) {
    if (count > 0 && (w.empty() || (count - 1) + (w.size() - 1) * stride >= f.size()))
        throw InvalidArgument("max_abs_weighted_diff: window exceeds input");
    return DERIVSAMP_DISPATCH(max_abs_weighted_diff, f, w, stride, count);
}

double weighted_sq_diff(std::span<const double> a, std::span<const double> b, std::span<const double> w) {
    if (a.size() != b.size() || a.size() != w.size()) throw InvalidArgument("weighted_sq_diff: size mismatch");
    return DERIVSAMP_DISPATCH(weighted_sq_diff, a, b, w);
}

#if !defined(DERIVSAMP_HAVE_AVX2)
namespace avx2 {
void eval_pieces(const PieceTable&, std::span<const double>, std::span<double>, double) {
    throw InvalidArgument("built without AVX2 kernels");
}
double max_abs_weighted_diff(std::span<const double>, std::span<const double>, std::size_t, std::size_t) {
    throw InvalidArgument("built without AVX2 kernels");
}
double weighted_sq_diff(std::span<const double>, std::span<const double>, std::span<const double>) {
    throw InvalidArgument("built without AVX2 kernels");
}
}  // namespace avx2
#endif

}  // namespace derivsamp::simd
