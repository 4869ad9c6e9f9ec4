#include "commands.hpp"

#include "derivsamp/error.hpp"
#include "derivsamp/format.hpp"
#include "derivsamp/kernel.hpp"
#include "derivsamp/rational.hpp"
#include "derivsamp/sampler.hpp"
#include "derivsamp/signals.hpp"
#include "derivsamp/smoothness.hpp"
#include "derivsamp/symbol.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>
#include <utility>

namespace derivsamp::cli {

namespace {

Kappa kappa_of(const RunConfig& cfg) {
    Kappa k{cfg.m, parse_rational(cfg.a), cfg.rho};
    k.validate();
    return k;
}

SignalSpec signal_of(const RunConfig& cfg) {
    SignalSpec f = [&] {
        if (cfg.signal_csv.empty()) return catalog_signal(cfg.signal);
        std::ifstream in(cfg.signal_csv);
        if (!in) throw InvalidArgument("cannot open signal file " + cfg.signal_csv);
        return tabulated_signal(in, cfg.signal_csv);
    }();
    if (cfg.deriv < 0) throw InvalidArgument("--deriv must be >= 0");
    return cfg.deriv == 0 ? f : f.derivative(cfg.deriv);
}

std::string join_w(const std::vector<std::string>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? ";" : "") + w[i];
    return s;
}

std::string join_d(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + fmt_double(v[i]);
    return s;
}

const char* yes_no(bool b) { return b ? "1" : "0"; }

std::string coeff_row(const LaurentPoly& p) {
    std::string s;
    for (long d = p.low_degree(); d <= p.high_degree(); ++d) s += "," + p.coeff(d).get_str();
    return s;
}

}  // namespace

double parse_w(const std::string& text) {
    const std::string s = [&] {
        std::string t;
        for (char c : text)
            if (c != ' ') t += c;
        return t;
    }();
    const auto sq = s.find("sqrt(");
    if (sq == std::string::npos) {
        size_t pos = 0;
        double w = 0;
        try {
            w = std::stod(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size() || s.empty()) throw InvalidArgument("bad W value '" + text + "'");
        if (!(w > 0)) throw InvalidArgument("W must be positive");
        return w;
    }
    if (s.back() != ')') throw InvalidArgument("bad W value '" + text + "'");
    double factor = 1.0;
    if (sq > 0) {
        if (s[sq - 1] != '*') throw InvalidArgument("bad W value '" + text + "'");
        factor = parse_w(s.substr(0, sq - 1));
    }
    const double radicand = parse_w(s.substr(sq + 5, s.size() - sq - 6));
    return factor * std::sqrt(radicand);
}

std::string header_line(const RunConfig& c) {
    std::ostringstream os;
    os << "# derivsamp v1,subcommand=" << c.subcommand << ",m=" << c.m << ",a=" << c.a << ",rho=" << c.rho
       << ",W=" << join_w(c.W) << ",p=" << fmt_double(c.p) << ",signal=" << c.signal
       << ",signal_csv=" << c.signal_csv << ",out=" << c.out << ",tol=" << fmt_double(c.tol) << ",seed=" << c.seed
       << ",grid_n=" << c.grid_n << ",r=" << c.r << ",delta=" << join_d(c.delta) << ",deriv=" << c.deriv
       << ",m_max=" << c.m_max << ",rho_max=" << c.rho_max << ",trials=" << c.trials << '\n';
    return os.str();
}

int cmd_tables(const RunConfig&, std::ostream& os) {
    os << "table_id,m,degree,coefficients\n";
    for (int table : {1, 2}) {
        for (int m = 3; m <= 9; ++m) {
            const LaurentPoly p = table_polynomial({m, parse_rational(table == 1 ? "0" : "1/2"), 2});
            os << table << ',' << m << ',' << p.high_degree() << coeff_row(p) << '\n';
        }
    }
    return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& os) {
    const Kappa kappa = kappa_of(cfg);
    const CisReport rep = check_cis(kappa, cfg.tol);
    os << "key,value\n";
    os << "kappa," << kappa.to_string() << '\n';
    os << "det," << rep.det.to_string("z") << '\n';
    os << "verdict," << to_string(rep.certificate.verdict) << '\n';
    os << "min_modulus," << fmt_double(rep.certificate.min_modulus) << '\n';
    os << "argmin_t," << fmt_double(rep.certificate.argmin_t) << '\n';
    os << "root_margin," << fmt_double(rep.certificate.root_margin) << '\n';
    os << "cis," << yes_no(rep.is_cis) << '\n';
    if (rep.inconclusive) return kNumerical;
    if (!rep.is_cis) return kNegative;
    const BoundsReport b = frame_bounds(kappa, cfg.grid_n);
    os << "A_kappa," << fmt_double(b.A_kappa) << '\n';
    os << "B_kappa," << fmt_double(b.B_kappa) << '\n';
    os << "upper_frame," << fmt_double(b.upper_frame) << '\n';
    return kOk;
}

int cmd_kernel_dump(const RunConfig& cfg, std::ostream& os) {
    const KernelTable table = inv_symbol_coeffs(kappa_of(cfg), std::min(cfg.tol, 1e-12));
    write_kernel_csv(os, table);
    return kOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& os) {
    if (cfg.W.empty()) throw InvalidArgument("--W is required");
    std::vector<double> W;
    for (const auto& w : cfg.W) W.push_back(parse_w(w));
    const KernelTable table = inv_symbol_coeffs(kappa_of(cfg));
    const SignalSpec f = signal_of(cfg);
    std::vector<std::future<double>> jobs;
    for (double w : W) {
        jobs.push_back(std::async(std::launch::async, [&table, &f, w, p = cfg.p] {
            const ApproxSetup setup = approx_setup(table, f, w);
            const Reconstruction rec(take_samples(f, setup.grid), table, w);
            return lp_error(rec, &f, setup.region, p);
        }));
    }
    std::vector<double> err;
    for (auto& j : jobs) err.push_back(j.get());
    os << "W,error,log10W,log10err\n";
    std::vector<std::pair<double, double>> pairs;
    for (size_t k = 0; k < W.size(); ++k) {
        os << fmt_double(W[k]) << ',' << fmt_double(err[k]) << ',' << fmt_double(std::log10(W[k])) << ','
           << fmt_double(std::log10(err[k])) << '\n';
        if (err[k] > 0) pairs.emplace_back(W[k], err[k]);
    }
    if (pairs.size() >= 4) {
        const OrderFit fit = fit_order(pairs);
        os << "# fit,rate=" << fmt_double(-fit.slope) << ",r2=" << fmt_double(fit.r2) << '\n';
    }
    return kOk;
}

int cmd_tau(const RunConfig& cfg, std::ostream& os) {
    const SignalSpec f = signal_of(cfg);
    std::vector<std::future<TauEstimate>> jobs;
    for (double d : cfg.delta)
        jobs.push_back(std::async(std::launch::async, [&f, d, &cfg] { return tau_modulus(f, cfg.r, d, cfg.p); }));
    os << "delta,tau,log10delta,log10tau\n";
    std::vector<std::pair<double, double>> pairs;
    for (size_t k = 0; k < jobs.size(); ++k) {
        const TauEstimate t = jobs[k].get();
        os << fmt_double(t.delta) << ',' << fmt_double(t.value) << ',' << fmt_double(std::log10(t.delta)) << ','
           << fmt_double(std::log10(t.value)) << '\n';
        if (t.value > 0) pairs.emplace_back(t.delta, t.value);
    }
    if (pairs.size() >= 4) {
        const OrderFit fit = fit_order(pairs);
        os << "# fit,exponent=" << fmt_double(fit.slope) << ",r2=" << fmt_double(fit.r2);
        if (auto e = f.expected_tau_order(0, cfg.r, cfg.p)) os << ",expected=" << fmt_double(*e);
        os << '\n';
    }
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& os) {
    const auto rows = scan_assumption1(cfg.m_max, cfg.rho_max);
    os << "m,a,rho,is_cis,predicted,inconclusive,root_margin,disagrees\n";
    for (const auto& r : rows) {
        os << r.m << ',' << to_string(r.a) << ',' << r.rho << ',' << yes_no(r.is_cis) << ',' << yes_no(r.predicted)
           << ',' << yes_no(r.inconclusive) << ',' << fmt_double(r.root_margin) << ',' << yes_no(!r.agrees())
           << '\n';
    }
    return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& os) {
    const Kappa kappa = kappa_of(cfg);
    if (!check_cis(kappa, cfg.tol).is_cis) throw NotCis(kappa.to_string() + " is not a complete interpolation set");
    const BoundsReport b = frame_bounds(kappa, cfg.grid_n);
    os << "key,value\n";
    os << "kappa," << kappa.to_string() << '\n';
    os << "A_kappa," << fmt_double(b.A_kappa) << '\n';
    os << "B_kappa," << fmt_double(b.B_kappa) << '\n';
    os << "lambda_min_sup," << fmt_double(b.lambda_min_sup) << '\n';
    os << "riesz_lower," << fmt_double(b.riesz_lower) << '\n';
    os << "upper_frame," << fmt_double(b.upper_frame) << '\n';
    if (cfg.trials > 0) {
        const InequalityReport inq = verify_sampling_inequality(kappa, cfg.trials, cfg.seed);
        os << "trials," << inq.trials << '\n';
        os << "violations," << inq.violations << '\n';
        os << "min_ratio," << fmt_double(inq.min_ratio) << '\n';
        os << "max_ratio," << fmt_double(inq.max_ratio) << '\n';
        if (inq.violations > 0) return kNumerical;
    }
    return kOk;
}

int run(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    using Cmd = int (*)(const RunConfig&, std::ostream&);
    const std::pair<const char*, Cmd> table[] = {
        {"tables", cmd_tables}, {"check", cmd_check}, {"kernel-dump", cmd_kernel_dump}, {"approx", cmd_approx},
        {"tau", cmd_tau},       {"scan", cmd_scan},   {"bounds", cmd_bounds},
    };
    Cmd cmd = nullptr;
    for (const auto& [name, fn] : table)
        if (cfg.subcommand == name) cmd = fn;
    if (!cmd) {
        err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
        return kUsage;
    }
    // Buffer the body so a failed run never leaves a partial CSV behind.
    std::ostringstream body;
    int code = kOk;
    try {
        body << header_line(cfg);
        code = cmd(cfg, body);
    } catch (const UndefinedSample& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotCis& e) {
        err << "not a complete interpolation set: " << e.what() << '\n';
        return kNegative;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    if (cfg.out.empty()) {
        os << body.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out << '\n';
            return kUsage;
        }
        file << body.str();
    }
    return code;
}

}  // namespace derivsamp::cli
