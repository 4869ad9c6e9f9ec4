#include "derivsamp/signals.hpp"

#include "derivsamp/error.hpp"
#include "derivsamp/format.hpp"
#include "derivsamp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <istream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace derivsamp {

using std::numbers::pi;

SplineElement::SplineElement(int m, long k0, std::vector<double> coeffs) : m_(m), k0_(k0), coeffs_(std::move(coeffs)) {
    if (m_ < 1) throw InvalidArgument("B-spline order must be >= 1");
    for (int k = 0; k < m_; ++k) pieces_.push_back(PiecewisePoly::from_bspline(m_, k0_, coeffs_, k));
}

Interval SplineElement::support() const {
    return {static_cast<double>(k0_), static_cast<double>(k0_ + static_cast<long>(coeffs_.size()) - 1 + m_)};
}

double SplineElement::eval(int k, double t) const {
    if (k < 0 || k >= m_) throw InvalidArgument("spline derivative order out of range");
    return pieces_[static_cast<size_t>(k)](t);
}


double SplineElement::l2_norm_sq() const {
    const auto [x, w] = gauss_legendre_unit(m_);
    const PiecewisePoly& p = pieces_[0];
    double sum = 0.0;
    for (long n = p.first(); n < p.last(); ++n)
        for (size_t q = 0; q < x.size(); ++q) {
            const double v = p(static_cast<double>(n) + x[q]);
            sum += w[q] * v * v;
        }
    return sum;
}

SplineElement random_spline(int m, int support_len, std::uint64_t seed, long k0) {
    if (support_len < 1) throw InvalidArgument("support length must be >= 1");
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> c(static_cast<size_t>(support_len));
    for (auto& v : c) v = dist(gen);
    return SplineElement(m, k0, std::move(c));
}

SignalSpec::SignalSpec(std::string id, int max_order, Eval eval, std::vector<Exception> exceptions,
                       std::vector<double> breakpoints, Interval support_hint, TauOrderRule tau_orders)
    : id_(std::move(id)),
      max_order_(max_order),
      eval_(std::move(eval)),
      exceptions_(std::move(exceptions)),
      breakpoints_(std::move(breakpoints)),
      support_(support_hint),
      tau_orders_(std::move(tau_orders)) {}

double SignalSpec::value(int i, double t) const {
    if (i < 0 || i > max_order_)
        throw InvalidArgument("signal " + id_ + " provides derivatives up to order " + std::to_string(max_order_));
    return eval_(i, t);
}

double SignalSpec::sample(int i, double t) const {
    for (const auto& e : exceptions_) {
        if (i >= e.from_order && std::abs(t - e.point) <= 1e-12 * std::max(1.0, std::abs(e.point)))
            throw UndefinedSample("sample node " + fmt_double(t) + " of signal " + id_ + " hits the exceptional point " +
                                      fmt_double(e.point) + " (derivative order " + std::to_string(i) +
                                      "); choose W so that no node lands there, e.g. an irrational multiple",
                                  t, i);
    }
    return value(i, t);
}

std::optional<double> SignalSpec::expected_tau_order(int i, int r, double p) const {
    if (!tau_orders_) return std::nullopt;
    return tau_orders_(i, r, p);
}

SignalSpec SignalSpec::derivative(int i) const {
    if (i < 0 || i > max_order_) throw InvalidArgument("derivative order out of range for " + id_);
    if (i == 0) return *this;
    auto base = eval_;
    std::vector<Exception> ex;
    for (auto e : exceptions_) ex.push_back({e.point, std::max(0, e.from_order - i)});
    TauOrderRule rule;
    if (tau_orders_) rule = [r0 = tau_orders_, i](int k, int r, double p) { return r0(k + i, r, p); };
    return SignalSpec(id_ + "^(" + std::to_string(i) + ")", max_order_ - i,
                      [base, i](int k, double t) { return base(k + i, t); }, std::move(ex), breakpoints_, support_,
                      std::move(rule));
}

namespace {

constexpr int kF1MaxOrder = 6;

// d^k/dt^k exp(g), g = -t^2/4 + 2 pi i t, equals exp(g) H_k(t); H_{k+1} = H_k' + g' H_k.
const std::array<std::vector<std::complex<double>>, kF1MaxOrder + 1>& f1_polys() {
    static const auto polys = [] {
        std::array<std::vector<std::complex<double>>, kF1MaxOrder + 1> h;
        h[0] = {1.0};
        const std::complex<double> g1c(0.0, 2.0 * pi);  // g' = 2 pi i - t/2
        for (int k = 0; k < kF1MaxOrder; ++k) {
            std::vector<std::complex<double>> next(h[k].size() + 1, 0.0);
            for (size_t d = 1; d < h[k].size(); ++d) next[d - 1] += static_cast<double>(d) * h[k][d];
            for (size_t d = 0; d < h[k].size(); ++d) {
                next[d] += g1c * h[k][d];
                next[d + 1] += -0.5 * h[k][d];
            }
            h[k + 1] = std::move(next);
        }
        return h;
    }();
    return polys;
}

double f1_eval(int i, double t) {
    const auto& h = f1_polys()[static_cast<size_t>(i)];
    std::complex<double> acc = 0.0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * t + *it;
    return (std::exp(-t * t / 4.0) * std::polar(1.0, 2.0 * pi * t) * acc).imag();
}

double f2_eval(int i, double t) {
    if (std::abs(t) > 3.0) return 0.0;
    if (i == 0) {
        const double s = std::sin(pi * t);
        return s * s;
    }
    // d/dt sin^2(pi t) = pi sin(2 pi t)
    return pi * std::pow(2.0 * pi, i - 1) * std::sin(2.0 * pi * t + (i - 1) * pi / 2.0);
}

double f3_eval(int i, double t) {
    if (!(t > -1.5 && t < 3.0)) return 0.0;
    switch (i) {
        case 0: return -0.5 * t * t * t + 2.0;
        case 1: return -1.5 * t * t;
        case 2: return -3.0 * t;
        case 3: return -3.0;
        default: return 0.0;
    }
}

std::optional<double> f1_orders(int, int r, double) { return static_cast<double>(r); }

std::optional<double> f2_orders(int i, int r, double p) {
    if (i == 0) return r <= 2 ? static_cast<double>(r) : 2.0 + 1.0 / p;
    if (i == 1) return r == 1 ? 1.0 : 1.0 + 1.0 / p;
    return 1.0 / p;
}

std::optional<double> f3_orders(int, int, double p) { return 1.0 / p; }

std::optional<double> smooth_orders(int, int r, double) { return static_cast<double>(r); }

}  // namespace

SignalSpec polynomial_signal(std::string id, std::vector<double> c) {
    const int deg = static_cast<int>(c.size()) - 1;
    auto eval = [c](int i, double t) {
        double acc = 0.0;
        for (size_t d = c.size(); d-- > static_cast<size_t>(i);) {
            double f = 1.0;
            for (int q = 0; q < i; ++q) f *= static_cast<double>(d - static_cast<size_t>(q));
            acc = acc * t + f * c[d];
        }
        return acc;
    };
    return SignalSpec(std::move(id), std::max(deg, 0) + 8, eval, {}, {}, {-50.0, 50.0}, smooth_orders);
}

std::vector<SignalSpec> catalog() {
    std::vector<SignalSpec> out;
    out.emplace_back("f1", kF1MaxOrder, f1_eval, std::vector<SignalSpec::Exception>{}, std::vector<double>{},
                     Interval{-12.0, 12.0}, f1_orders);
    out.emplace_back("f2", 6, f2_eval, std::vector<SignalSpec::Exception>{{-3.0, 2}, {3.0, 2}},
                     std::vector<double>{-3.0, 3.0}, Interval{-3.0, 3.0}, f2_orders);
    out.emplace_back("f3", 6, f3_eval, std::vector<SignalSpec::Exception>{{-1.5, 0}, {3.0, 0}},
                     std::vector<double>{-1.5, 3.0}, Interval{-1.5, 3.0}, f3_orders);
    out.push_back(polynomial_signal("one", {1.0}));
    out.push_back(polynomial_signal("t", {0.0, 1.0}));
    out.push_back(polynomial_signal("t2", {0.0, 0.0, 1.0}));
    out.push_back(polynomial_signal("t3", {0.0, 0.0, 0.0, 1.0}));
    return out;
}

SignalSpec catalog_signal(const std::string& id) {
    for (auto& s : catalog())
        if (s.id() == id) return s;
    throw InvalidArgument("unknown signal '" + id + "' (known: f1, f2, f3, one, t, t2, t3)");
}

SignalSpec spline_signal(const SplineElement& f) {
    auto shared = std::make_shared<SplineElement>(f);
    std::vector<double> knots;
    const Interval s = f.support();
    for (double k = s.lo; k <= s.hi; k += 1.0) knots.push_back(k);
    return SignalSpec("spline", std::max(f.m() - 2, 0), [shared](int i, double t) { return shared->eval(i, t); }, {},
                      std::move(knots), s, smooth_orders);
}

SignalSpec tabulated_signal(std::istream& csv, std::string id) {
    auto ts = std::make_shared<std::vector<double>>();
    auto cols = std::make_shared<std::vector<std::vector<double>>>();
    std::string line;
    size_t width = 0;
    while (std::getline(csv, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() < 2) throw InvalidArgument("signal CSV needs at least columns t,f");
        if (fields[0] == "t") {
            width = fields.size();
            continue;
        }
        if (width == 0) width = fields.size();
        if (fields.size() != width) throw InvalidArgument("ragged signal CSV row: " + line);
        std::vector<double> row;
        try {
            for (const auto& x : fields) row.push_back(std::stod(x));
        } catch (const std::exception&) {
            throw InvalidArgument("non-numeric signal CSV row: " + line);
        }
        if (!ts->empty() && row[0] <= ts->back()) throw InvalidArgument("signal CSV abscissae must increase");
        ts->push_back(row[0]);
        cols->push_back(std::vector<double>(row.begin() + 1, row.end()));
    }
    if (ts->empty()) throw InvalidArgument("signal CSV has no rows");
    const int max_order = static_cast<int>(width) - 2;
    auto eval = [ts, cols](int i, double t) {
        if (t < ts->front() || t > ts->back()) return 0.0;
        auto it = std::lower_bound(ts->begin(), ts->end(), t);
        size_t k = static_cast<size_t>(it - ts->begin());
        if (k > 0 && (k == ts->size() || t - (*ts)[k - 1] <= (*ts)[k] - t)) --k;
        return (*cols)[k][static_cast<size_t>(i)];
    };
    return SignalSpec(std::move(id), max_order, eval, {}, {}, Interval{ts->front(), ts->back()}, nullptr);
}

}  // namespace derivsamp
