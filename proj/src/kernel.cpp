#include "derivsamp/kernel.hpp"

#include "derivsamp/bspline.hpp"
#include "derivsamp/error.hpp"
#include "derivsamp/format.hpp"

#include <Eigen/LU>
#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

namespace derivsamp {

KernelTable::KernelTable(Kappa kappa, int V, double tail_bound, int grid_n, std::vector<std::complex<double>> coeffs)
    : kappa_(std::move(kappa)), V_(V), tail_bound_(tail_bound), grid_n_(grid_n), coeffs_(std::move(coeffs)) {
    kappa_.validate();
    const int rho = kappa_.rho;
    if (V_ < 0 || coeffs_.size() != static_cast<size_t>(rho * rho * (2 * V_ + 1)))
        throw InvalidArgument("kernel table has the wrong number of coefficients");
    for (const auto& c : coeffs_)
        if (std::abs(c.imag()) > 1e-10)
            throw NumericalFailure("kernel coefficients are not real (|im| = " + fmt_double(std::abs(c.imag())) + ")");
    const long len = static_cast<long>(rho) * (2 * V_ + 1);
    spline_.assign(static_cast<size_t>(rho), std::vector<double>(static_cast<size_t>(len), 0.0));
    for (int i = 0; i < rho; ++i) {
        for (int v = -V_; v <= V_; ++v)
            for (int j = 0; j < rho; ++j)
                spline_[i][static_cast<size_t>(rho * v + j - k_first())] = coeff(j, i, v).real();
        theta_.push_back(PiecewisePoly::from_bspline(kappa_.m, k_first(), spline_[i]));
    }
}

std::complex<double> KernelTable::coeff(int j, int i, int v) const {
    if (v < -V_ || v > V_) return 0.0;
    return coeffs_[static_cast<size_t>((j * kappa_.rho + i) * (2 * V_ + 1) + v + V_)];
}

const std::vector<double>& KernelTable::spline_coeffs(int i) const { return spline_.at(static_cast<size_t>(i)); }

const PiecewisePoly& KernelTable::theta(int i) const { return theta_.at(static_cast<size_t>(i)); }

PiecewisePoly KernelTable::theta_derivative(int i, int k) const {
    return PiecewisePoly::from_bspline(kappa_.m, k_first(), spline_coeffs(i), k);
}

namespace {

std::mutex& fftw_planner_mutex() {
    static std::mutex mu;
    return mu;
}

// Coefficient spectra of every entry of Psi^{-1} on an n-point grid:
// out[e][k], e = j * rho + i, k the FFT index (v mod n), already divided by n.
std::vector<std::vector<std::complex<double>>> inverse_spectra(const SymbolMatrix& sym, int n) {
    const int rho = sym.kappa.rho;
    std::vector<std::vector<std::complex<double>>> samples(static_cast<size_t>(rho * rho),
                                                           std::vector<std::complex<double>>(static_cast<size_t>(n)));
    for (int q = 0; q < n; ++q) {
        const Eigen::MatrixXcd M = sym.eval_t(static_cast<double>(q) / n);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
        const Eigen::MatrixXcd inv = lu.inverse();
        if (!inv.allFinite()) throw NumericalFailure("symbol matrix is singular on the sampling grid");
        for (int j = 0; j < rho; ++j)
            for (int i = 0; i < rho; ++i) samples[static_cast<size_t>(j * rho + i)][static_cast<size_t>(q)] = inv(j, i);
    }
    std::vector<std::vector<std::complex<double>>> out(samples.size(),
                                                       std::vector<std::complex<double>>(static_cast<size_t>(n)));
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(samples[0].data()),
                                reinterpret_cast<fftw_complex*>(out[0].data()), FFTW_FORWARD, FFTW_ESTIMATE);
    }
    for (size_t e = 0; e < samples.size(); ++e)
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(samples[e].data()),
                         reinterpret_cast<fftw_complex*>(out[e].data()));
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    for (auto& row : out)
        for (auto& c : row) c /= static_cast<double>(n);
    return out;
}

std::complex<double> at(const std::vector<std::complex<double>>& spec, int v) {
    const int n = static_cast<int>(spec.size());
    return spec[static_cast<size_t>(((v % n) + n) % n)];
}

}  // namespace

KernelTable inv_symbol_coeffs(const Kappa& kappa, double tol) {
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    const CisReport rep = check_cis(kappa);
    if (!rep.is_cis)
        throw NotCis(kappa.to_string() + " is not a complete interpolation set (certificate: " +
                     to_string(rep.certificate.verdict) + ")");
    const SymbolMatrix sym = build_symbol(kappa);
    const int rho = kappa.rho;
    const size_t entries = static_cast<size_t>(rho * rho);

    std::vector<std::vector<std::complex<double>>> prev, spec;
    int n = 32;
    bool converged = false;
    double edge = 0.0;
    for (; n <= (1 << 16); n *= 2) {
        spec = inverse_spectra(sym, n);
        edge = 0.0;
        for (const auto& s : spec)
            for (int v = n / 4; v <= n / 2; ++v) edge = std::max({edge, std::abs(at(s, v)), std::abs(at(s, -v))});
        double drift = 0.0;
        if (!prev.empty()) {
            const int half = n / 8;  // N_prev / 4
            for (size_t e = 0; e < entries; ++e)
                for (int v = -half; v <= half; ++v) drift = std::max(drift, std::abs(at(spec[e], v) - at(prev[e], v)));
        }
        if (!prev.empty() && edge < tol && drift < tol) {
            converged = true;
            break;
        }
        prev = std::move(spec);
    }
    if (!converged) throw NumericalFailure("inverse symbol coefficients did not converge for " + kappa.to_string());

    // mass_beyond[V] = sum over entries and V < |v| < n/2
    const int vmax = n / 2 - 1;
    std::vector<double> mass_beyond(static_cast<size_t>(vmax + 1), 0.0);
    for (int V = vmax - 1; V >= 0; --V) {
        double ring = 0.0;
        for (const auto& s : spec) ring += std::abs(at(s, V + 1)) + std::abs(at(s, -(V + 1)));
        mass_beyond[static_cast<size_t>(V)] = mass_beyond[static_cast<size_t>(V + 1)] + ring;
    }
    // Coefficients decay like the modulus of the det root nearest the circle.
    const double margin = rep.certificate.root_margin;
    const double ratio = std::isfinite(margin) ? 1.0 - margin : 0.5;
    if (!(ratio < 1.0)) throw NumericalFailure("inverse symbol coefficients do not decay for " + kappa.to_string());
    const double beyond_grid = 2.0 * static_cast<double>(entries) * edge * ratio / (1.0 - ratio);

    int V = 0;
    while (V < vmax && mass_beyond[static_cast<size_t>(V)] + beyond_grid > tol / 10.0) ++V;
    const double tail = mass_beyond[static_cast<size_t>(V)] + beyond_grid;
    if (!(tail < tol)) throw NumericalFailure("tail bound " + fmt_double(tail) + " not below " + fmt_double(tol));

    std::vector<std::complex<double>> coeffs(entries * static_cast<size_t>(2 * V + 1));
    for (int j = 0; j < rho; ++j)
        for (int i = 0; i < rho; ++i)
            for (int v = -V; v <= V; ++v)
                coeffs[static_cast<size_t>((j * rho + i) * (2 * V + 1) + v + V)] = at(spec[static_cast<size_t>(j * rho + i)], v);
    return KernelTable(kappa, V, tail, n, std::move(coeffs));
}

double theta_eval(const KernelTable& table, int i, double t) {
    const Kappa& k = table.kappa();
    if (i < 0 || i >= k.rho) throw InvalidArgument("channel index out of range");
    std::complex<double> sum = 0.0;
    for (int v = -table.V(); v <= table.V(); ++v)
        for (int j = 0; j < k.rho; ++j) sum += table.coeff(j, i, v) * eval_q(k.m, t - k.rho * v - j);
    if (std::abs(sum.imag()) > 1e-10) throw NumericalFailure("kernel value has a non-negligible imaginary part");
    return sum.real();
}

ReproducingReport reproducing_order(const KernelTable& table, int r_max, double tol) {
    if (r_max < 0 || r_max > 6) throw InvalidArgument("r_max must lie in [0, 6]");
    const Kappa& k = table.kappa();
    const int rho = k.rho;
    const double a = k.a.get_d();
    ReproducingReport rep{k, -1, {}};
    constexpr int points = 64;
    for (int n = 0; n <= r_max; ++n) {
        double worst = 0.0;
        for (int q = 0; q < points; ++q) {
            const double t = rho * (q + 0.5) / points;
            const long l_lo = static_cast<long>(std::ceil((t - table.support_hi()) / rho));
            const long l_hi = static_cast<long>(std::floor((t - table.support_lo()) / rho));
            double sum = 0.0;
            for (int i = 0; i <= std::min(n, rho - 1); ++i) {
                double w = binomial(n, i).get_d() * factorial(i).get_d();
                double inner = 0.0;
                for (long l = l_lo; l <= l_hi; ++l)
                    inner += std::pow(a + rho * static_cast<double>(l) - t, n - i) * table.theta(i)(t - rho * static_cast<double>(l));
                sum += w * inner;
            }
            worst = std::max(worst, std::abs(sum - (n == 0 ? 1.0 : 0.0)));
        }
        rep.residuals.push_back(worst);
    }
    for (int n = 0; n <= r_max && rep.residuals[static_cast<size_t>(n)] <= tol; ++n) rep.order = n;
    return rep;
}

std::complex<double> theta_hat_deriv(const KernelTable& table, int i, int k, double xi) {
    if (k < 0 || k > 3) throw InvalidArgument("Fourier derivative order must be <= 3");
    const Kappa& kap = table.kappa();
    using std::numbers::pi;
    const std::complex<double> I(0.0, 1.0);
    // g_i^{(s)}(xi) = sum_k d_k (-2 pi i k)^s e^{-2 pi i k xi}, k = rho v + j
    auto g = [&](int s) {
        std::complex<double> sum = 0.0;
        for (int v = -table.V(); v <= table.V(); ++v) {
            for (int j = 0; j < kap.rho; ++j) {
                const double kk = kap.rho * v + j;
                sum += table.coeff(j, i, v) * std::pow(-2.0 * pi * I * kk, s) * std::polar(1.0, -2.0 * pi * kk * xi);
            }
        }
        return sum;
    };
    std::complex<double> out = 0.0;
    for (int q = 0; q <= k; ++q) out += binomial(k, q).get_d() * fourier_q_deriv(kap.m, q, xi) * g(k - q);
    return out;
}

std::complex<double> moment_check_fourier(const KernelTable& table, int n, int l) {
    if (n < 0 || n > 3) throw InvalidArgument("moment_check_fourier supports n <= 3");
    const Kappa& k = table.kappa();
    using std::numbers::pi;
    const std::complex<double> two_pi_i(0.0, 2.0 * pi);
    const double a = k.a.get_d();
    const double xi = static_cast<double>(l) / k.rho;
    std::complex<double> lhs = 0.0;
    for (int i = 0; i <= std::min(n, k.rho - 1); ++i) {
        std::complex<double> inner = 0.0;
        for (int mp = 0; mp <= n - i; ++mp)
            inner += binomial(n - i, mp).get_d() * std::pow(a, mp) * std::pow(two_pi_i, mp + i - n) *
                     theta_hat_deriv(table, i, n - i - mp, xi);
        lhs += binomial(n, i).get_d() * factorial(i).get_d() * inner;
    }
    return lhs - (n == 0 && l == 0 ? static_cast<double>(k.rho) : 0.0);
}

void write_kernel_csv(std::ostream& os, const KernelTable& table) {
    const Kappa& k = table.kappa();
    os << "# kernel,m=" << k.m << ",a=" << k.a.get_str() << ",rho=" << k.rho << ",V=" << table.V()
       << ",tail_bound=" << fmt_double(table.tail_bound()) << ",grid_n=" << table.grid_n() << "\n";
    os << "j,i,v,re,im\n";
    for (int j = 0; j < k.rho; ++j)
        for (int i = 0; i < k.rho; ++i)
            for (int v = -table.V(); v <= table.V(); ++v) {
                const auto c = table.coeff(j, i, v);
                os << j << "," << i << "," << v << "," << fmt_double(c.real()) << "," << fmt_double(c.imag()) << "\n";
            }
}

KernelTable read_kernel_csv(std::istream& is) {
    std::string line;
    std::map<std::string, std::string> meta;
    std::map<std::tuple<int, int, int>, std::complex<double>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# kernel,", 0) == 0) {
            std::stringstream ss(line.substr(9));
            std::string kv;
            while (std::getline(ss, kv, ',')) {
                auto eq = kv.find('=');
                if (eq != std::string::npos) meta[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            continue;
        }
        if (line[0] == '#' || line.rfind("j,", 0) == 0) continue;
        std::stringstream ss(line);
        std::string f[5];
        for (auto& s : f)
            if (!std::getline(ss, s, ',')) throw InvalidArgument("malformed kernel row: " + line);
        rows[{std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2])}] = {std::stod(f[3]), std::stod(f[4])};
    }
    for (const char* key : {"m", "a", "rho", "V", "tail_bound", "grid_n"})
        if (!meta.count(key)) throw InvalidArgument(std::string("kernel CSV lacks '") + key + "'");
    Kappa k{std::stoi(meta["m"]), parse_rational(meta["a"]), std::stoi(meta["rho"])};
    const int V = std::stoi(meta["V"]);
    std::vector<std::complex<double>> coeffs(static_cast<size_t>(k.rho * k.rho * (2 * V + 1)));
    for (const auto& [key, c] : rows) {
        auto [j, i, v] = key;
        if (j < 0 || j >= k.rho || i < 0 || i >= k.rho || v < -V || v > V)
            throw InvalidArgument("kernel row index out of range");
        coeffs[static_cast<size_t>((j * k.rho + i) * (2 * V + 1) + v + V)] = c;
    }
    return KernelTable(k, V, std::stod(meta["tail_bound"]), std::stoi(meta["grid_n"]), std::move(coeffs));
}

}  // namespace derivsamp
