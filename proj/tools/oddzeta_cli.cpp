// oddzeta command-line front end: exact Bernoulli data, high-precision zeta
// and Lambert-type sums, and identity verification with machine-readable
// reports. Exit codes: 0 success/pass, 1 verification failure, 2 usage or
// domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/identities.hpp"
#include "oddzeta/report_json.hpp"
#include "oddzeta/series.hpp"
#include "oddzeta/zeta_coeffs.hpp"

namespace {

using oddzeta::exact::Rational;
using oddzeta::identities::IdentityParams;
using oddzeta::identities::IdentityReport;
using oddzeta::identities::Perturbation;
using oddzeta::series::Real;

int g_exit = 0;

Rational parse_t(const std::string& s) {
    Rational t = Rational::from_string(s);
    if (t.sign() <= 0) throw std::domain_error("t must be positive");
    return t;
}

std::vector<Rational> parse_t_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_t(item));
    if (out.empty()) throw std::domain_error("t-list must be non-empty");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::domain_error("cannot open output file '" + out_path + "'");
    f << text;
}

Perturbation parse_corrupt(const std::string& mode) {
    Perturbation p;
    if (mode == "coeff-sign")
        p.flip_coeff_index = 1;
    else if (mode == "ab-drift")
        p.drift_alpha_beta = true;
    else if (!mode.empty())
        throw std::domain_error("unknown --corrupt mode '" + mode + "'");
    return p;
}

struct VerifyOptions {
    std::string which;
    unsigned long m = 0;
    std::string t = "1";
    long prec = 256;
    unsigned long n_trunc = 0;
    std::string format = "text";
    std::string out;
    std::string corrupt;
};

IdentityReport run_verify(const VerifyOptions& o) {
    Perturbation pert = parse_corrupt(o.corrupt);
    const bool perturbed = pert.flip_coeff_index >= 0 || pert.drift_alpha_beta;
    if (o.which == "ramanujan") {
        if (o.m < 1) throw std::domain_error("m must be >= 1");
        return oddzeta::identities::verify_ramanujan({o.m, parse_t(o.t), o.prec}, pert);
    }
    if (o.which == "coth") {
        if (o.m < 1) throw std::domain_error("m must be >= 1");
        return oddzeta::identities::verify_coth_variant({o.m, parse_t(o.t), o.prec}, pert);
    }
    if (perturbed) throw std::domain_error("--corrupt only applies to ramanujan/coth");
    if (o.which == "lerch") return oddzeta::identities::verify_lerch(o.m, o.prec);
    if (o.which == "convolution") {
        unsigned long n = o.n_trunc == 0 ? 4000 : o.n_trunc;
        if (o.m < 1) throw std::domain_error("m must be >= 1");
        return oddzeta::identities::verify_convolution_recursion(o.m, n, o.prec);
    }
    if (o.which == "telescope") {
        unsigned long k = o.n_trunc == 0 ? 3000 : o.n_trunc;
        if (o.m < 1) throw std::domain_error("m must be >= 1");
        const long wp = o.prec + 2 * oddzeta::series::kGuardBits;
        Real alpha = oddzeta::series::pi(wp).mul(parse_t(o.t));
        oddzeta::identities::QuasiZetaSequences q;
        q.x.coeff = alpha * alpha;
        q.z.coeff = oddzeta::series::pi(wp) * oddzeta::series::pi(wp);
        q.depth = o.m;
        return oddzeta::identities::telescope_check(q, k, o.prec);
    }
    throw std::domain_error("unknown identity '" + o.which + "'");
}

std::string render(const IdentityReport& r, const std::string& format) {
    return format == "json" ? oddzeta::identities::to_json(r) + "\n"
                            : oddzeta::identities::to_text(r);
}

struct ReportOptions {
    unsigned long m_max = 0;
    std::string t_list;
    long prec = 256;
    std::string format = "json";
    std::string out;
    std::string corrupt;
};

void run_report(const ReportOptions& o) {
    if (o.m_max < 1) throw std::domain_error("m-max must be >= 1");
    std::vector<Rational> ts = parse_t_list(o.t_list);
    Perturbation pert = parse_corrupt(o.corrupt);

    std::vector<IdentityReport> reports;
    for (unsigned long m = 1; m <= o.m_max; ++m) {
        for (const Rational& t : ts) {
            reports.push_back(oddzeta::identities::verify_ramanujan({m, t, o.prec}, pert));
            reports.push_back(oddzeta::identities::verify_coth_variant({m, t, o.prec}, pert));
        }
    }
    // lerch rows whose exponent 4m+3 stays within the grid's 2*m_max+1 range
    for (unsigned long ml = 0; 4 * ml + 3 <= 2 * o.m_max + 1; ++ml)
        reports.push_back(oddzeta::identities::verify_lerch(ml, o.prec));

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    std::ostringstream os;
    if (o.format == "json") {
        os << "{\"prec_bits\": " << o.prec << ", \"all_pass\": " << (all_pass ? "true" : "false")
           << ", \"reports\": [";
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i > 0) os << ", ";
            os << oddzeta::identities::to_json(reports[i]);
        }
        os << "]}\n";
    } else {
        for (const auto& r : reports) {
            os << to_string(r.identity) << " m=" << r.m << " t=" << r.t.to_string()
               << " prec=" << r.prec_bits << " abs_diff_log2=" << r.abs_diff_log2
               << (r.pass ? " pass" : " FAIL") << "\n";
        }
        os << "all_pass: " << (all_pass ? "true" : "false") << "\n";
    }
    emit(os.str(), o.out);
    if (!all_pass) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision evaluation and verification of Ramanujan's identity "
                 "for odd zeta values"};
    app.require_subcommand(1);

    // bernoulli <n>
    auto* c_bern = app.add_subcommand("bernoulli", "print B_n as an exact rational");
    unsigned long bern_n = 0;
    c_bern->add_option("n", bern_n, "index")->required();
    c_bern->callback([&]() { std::cout << oddzeta::exact::bernoulli(bern_n).to_string() << "\n"; });

    // zeta <s> [--prec P]
    auto* c_zeta = app.add_subcommand("zeta", "zeta(s) by Euler-Maclaurin summation");
    long zeta_s = 0;
    long zeta_prec = 256;
    c_zeta->add_option("s", zeta_s, "integer argument, s >= 2")->required();
    c_zeta->add_option("--prec", zeta_prec, "precision in bits")->check(CLI::Range(64, 8192));
    c_zeta->callback([&]() {
        if (zeta_s < 2) throw std::domain_error("s must be >= 2");
        Real z = oddzeta::series::zeta_integer(zeta_s, zeta_prec);
        std::cout << "zeta(" << zeta_s << ") = " << z.decimal_for_prec() << "\n";
        if (zeta_s % 2 == 0) {
            Rational c = oddzeta::exact::euler_zeta_coefficient(
                static_cast<unsigned long>(zeta_s) / 2);
            std::cout << "zeta(" << zeta_s << ") = (" << c.to_string() << ") * pi^" << zeta_s
                      << "\n";
        }
    });

    // lambert <s> --t p/q [--prec P]
    auto* c_lam = app.add_subcommand("lambert", "sum n^-s/(e^(2an)-1) with a = pi*t");
    long lam_s = 0;
    std::string lam_t;
    long lam_prec = 256;
    c_lam->add_option("s", lam_s, "odd exponent, s >= 3")->required();
    c_lam->add_option("--t", lam_t, "positive rational p/q with a = pi*t")->required();
    c_lam->add_option("--prec", lam_prec, "precision in bits")->check(CLI::Range(64, 8192));
    c_lam->callback([&]() {
        Rational t = parse_t(lam_t);
        Real a = oddzeta::series::pi(lam_prec + oddzeta::series::kGuardBits).mul(t);
        auto res = oddzeta::series::lambert_sum(lam_s, a, lam_prec);
        std::cout << "lambert_sum(" << lam_s << ", pi * " << t.to_string()
                  << ") = " << res.value.decimal_for_prec() << "\n"
                  << "terms: " << res.truncation.terms_used
                  << ", tail_log2: " << res.truncation.tail_bound_log2 << "\n";
    });

    // fast-zeta --m M [--prec P]
    auto* c_fz = app.add_subcommand("fast-zeta", "zeta(4m+3) via the Lerch rearrangement");
    unsigned long fz_m = 0;
    long fz_prec = 256;
    c_fz->add_option("--m", fz_m, "index m >= 0 (computes zeta(4m+3))")->required();
    c_fz->add_option("--prec", fz_prec, "precision in bits")->check(CLI::Range(64, 8192));
    c_fz->callback([&]() {
        auto res = oddzeta::identities::fast_odd_zeta_traced(fz_m, fz_prec);
        std::cout << "zeta(" << 4 * fz_m + 3 << ") = " << res.value.decimal_for_prec() << "\n"
                  << "terms: " << res.truncation.terms_used
                  << ", tail_log2: " << res.truncation.tail_bound_log2 << "\n";
    });

    // verify <which> ...
    auto* c_ver = app.add_subcommand("verify", "verify one identity instance");
    VerifyOptions vo;
    c_ver->add_option("which", vo.which, "ramanujan|coth|lerch|convolution|telescope")
        ->required()
        ->check(CLI::IsMember({"ramanujan", "coth", "lerch", "convolution", "telescope"}));
    c_ver->add_option("--m", vo.m, "identity index (depth n for telescope)")->required();
    c_ver->add_option("--t", vo.t, "positive rational p/q; alpha = pi*t, beta = pi/t");
    c_ver->add_option("--prec", vo.prec, "precision in bits")->check(CLI::Range(64, 8192));
    c_ver->add_option("--n-trunc", vo.n_trunc,
                      "truncation for convolution/telescope (defaults 4000/3000)");
    c_ver->add_option("--format", vo.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    c_ver->add_option("--out", vo.out, "write output to file");
    c_ver->add_option("--corrupt", vo.corrupt, "negative-control hook: coeff-sign|ab-drift")
        ->group("Testing hooks");
    c_ver->callback([&]() {
        IdentityReport r = run_verify(vo);
        emit(render(r, vo.format), vo.out);
        if (!r.pass) g_exit = 1;
    });

    // report --m-max M --t-list ...
    auto* c_rep = app.add_subcommand("report", "verification grid over m and t");
    ReportOptions ro;
    c_rep->add_option("--m-max", ro.m_max, "largest m (grid covers 1..m-max)")->required();
    c_rep->add_option("--t-list", ro.t_list, "comma-separated rationals p/q")->required();
    c_rep->add_option("--prec", ro.prec, "precision in bits")->check(CLI::Range(64, 8192));
    c_rep->add_option("--format", ro.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    c_rep->add_option("--out", ro.out, "write output to file");
    c_rep->add_option("--corrupt", ro.corrupt, "negative-control hook: coeff-sign|ab-drift")
        ->group("Testing hooks");
    c_rep->callback([&]() { run_report(ro); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
