// Command-line front end: residue symbols, Gauss sums, weight transforms,
// lattice counts, character-sum experiments, and the grid runner.

#include <array>
#include <cctype>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hecke/sums.hpp"

using namespace hecke;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

int ring_of_j(int j) { return j == 3 ? 1 : 0; }   // 0 = gauss, 1 = eisenstein

struct GridDefaults {
    double U = 0.0;
    double quad_tol = 1e-8;
    int threads = 0;
};

int run_symbol(int j, const std::string& a_text, const std::string& n_text) {
    SymbolValue s{j, 0};
    if (ring_of_j(j) == 0)
        s = symbol(j, parse_elt<GaussInt>(a_text), parse_elt<GaussInt>(n_text));
    else
        s = symbol(j, parse_elt<EisInt>(a_text), parse_elt<EisInt>(n_text));
    if (s.is_zero()) {
        std::printf("exponent: -\nvalue: 0\n");
    } else {
        std::printf("exponent: %d\nvalue: %s\n", s.exp, fmt_complex(s.value()).c_str());
    }
    return 0;
}

int run_gauss_sum(int j, const std::string& k_text, const std::string& n_text,
                  const std::string& method) {
    std::complex<double> value;
    double delta = -1.0;
    if (ring_of_j(j) == 0) {
        auto k = parse_elt<GaussInt>(k_text);
        auto n = parse_elt<GaussInt>(n_text);
        auto brute = gauss_sum(j, k, n);
        value = brute.v;
        if (j == 2) {
            auto ex = gauss_sum_explicit_q2(k, n);
            delta = std::abs(brute.v - ex.v);
            if (method == "explicit") value = ex.v;
        } else if (method == "explicit") {
            throw std::domain_error("explicit evaluation exists only for j=2");
        }
    } else {
        auto k = parse_elt<EisInt>(k_text);
        auto n = parse_elt<EisInt>(n_text);
        if (method == "explicit")
            throw std::domain_error("explicit evaluation exists only for j=2");
        value = gauss_sum(j, k, n).v;
    }
    std::printf("value: %s\n", fmt_complex(value).c_str());
    if (delta >= 0.0) std::printf("method_delta: %s\n", fmt(delta).c_str());
    return 0;
}

int run_compare(const SumConfig& cfg, const std::string& format) {
    auto r = compare(cfg);
    if (format == "csv") {
        std::printf("%s\n%s\n%s\n", config_echo_csv(cfg).c_str(), csv_header().c_str(),
                    csv_row(r).c_str());
    } else if (format == "json") {
        std::printf("%s\n", report_json(cfg, r).c_str());
    } else {
        std::printf("%s\n", config_echo_csv(cfg).c_str());
        std::printf("S        = %s\n", fmt_complex(r.direct).c_str());
        std::printf("main     = %s\n", fmt(r.main_term).c_str());
        std::printf("m0       = %s\n", fmt(r.m0_term).c_str());
        std::printf("ratio    = %s\n", fmt(r.ratio).c_str());
        std::printf("imag_frac= %s\n", fmt(r.imag_fraction).c_str());
        std::printf("counts   = %lld n, %lld m   (%.1f ms)\n", (long long)r.n_count,
                    (long long)r.m_count, r.elapsed_ms);
    }
    return 0;
}

int run_grid(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in.good()) throw CLI::ValidationError("grid", "cannot open config file " + path);
    GridDefaults defs;
    std::vector<std::array<double, 3>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string stripped;
        for (char c : line)
            if (!std::isspace((unsigned char)c)) stripped += c;
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("grid", "line " + std::to_string(lineno) +
                                                   ": expected key=value");
        std::string key = stripped.substr(0, eq), val = stripped.substr(eq + 1);
        try {
            if (key == "U") defs.U = std::stod(val);
            else if (key == "quad_tol") defs.quad_tol = std::stod(val);
            else if (key == "threads") defs.threads = std::stoi(val);
            else if (key == "grid") {
                auto c1 = val.find(','), c2 = val.rfind(',');
                if (c1 == std::string::npos || c2 == c1)
                    throw std::invalid_argument("need j,X,Y");
                double j = std::stod(val.substr(0, c1));
                double X = std::stod(val.substr(c1 + 1, c2 - c1 - 1));
                double Y = std::stod(val.substr(c2 + 1));
                rows.push_back({j, X, Y});
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::exception& e) {
            throw CLI::ValidationError("grid",
                                       "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    bool json = (format == "json");
    if (json) std::printf("[");
    else std::printf("%s\n", csv_header().c_str());
    bool first = true;
    for (auto [j, X, Y] : rows) {
        auto cfg = SumConfig::make((int)j, X, Y);
        cfg.U = defs.U;
        cfg.quad_tol = defs.quad_tol;
        cfg.threads = defs.threads;
        auto r = compare(cfg);
        if (json) {
            std::printf("%s%s", first ? "\n" : ",\n", report_json(cfg, r).c_str());
        } else {
            std::printf("%s\n", csv_row(r).c_str());
        }
        first = false;
    }
    if (json) std::printf("%s]\n", first ? "" : "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"character sums over Z[i] and Z[omega]"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    // symbol
    auto* sc_symbol = app.add_subcommand("symbol", "power residue symbol (a/n)_j");
    int s_j = 2;
    std::string s_a, s_n;
    sc_symbol->add_option("--j", s_j, "symbol order")->required()->check(CLI::IsMember({2, 3, 4}));
    sc_symbol->add_option("--a", s_a, "numerator element")->required();
    sc_symbol->add_option("--n", s_n, "primary modulus")->required();

    // gauss-sum
    auto* sc_gauss = app.add_subcommand("gauss-sum", "Gauss sum g_j(k,n)");
    int g_j = 2;
    std::string g_k, g_n, g_method = "brute";
    sc_gauss->add_option("--j", g_j)->required()->check(CLI::IsMember({2, 3, 4}));
    sc_gauss->add_option("--k", g_k)->required();
    sc_gauss->add_option("--n", g_n)->required();
    sc_gauss->add_option("--method", g_method)->check(CLI::IsMember({"brute", "explicit"}));

    // transform
    auto* sc_tr = app.add_subcommand("transform", "weight transform value");
    std::string t_field = "i";
    double t_t = 0.0, t_U = 8.0, t_tol = 1e-8;
    bool t_ref = false;
    sc_tr->add_option("--field", t_field)->check(CLI::IsMember({"i", "omega"}));
    sc_tr->add_option("--t", t_t)->required();
    sc_tr->add_option("--U", t_U)->required();
    sc_tr->add_option("--quad-tol", t_tol);
    sc_tr->add_flag("--reference", t_ref, "also evaluate the 2-D tensor reference");

    // count
    auto* sc_count = app.add_subcommand("count", "lattice counts by norm");
    std::string c_ring = "gauss", c_filter = "primary";
    std::int64_t c_x = 1000;
    int c_j = 2;
    sc_count->add_option("--ring", c_ring)->check(CLI::IsMember({"gauss", "eisenstein"}));
    sc_count->add_option("--x", c_x)->required();
    sc_count->add_option("--filter", c_filter)
        ->check(CLI::IsMember({"primary", "all", "coprime", "jth-power"}));
    sc_count->add_option("--j", c_j);

    // sum / predict / compare
    int m_j = 2;
    double m_X = 100.0, m_Y = 100.0, m_U = 0.0, m_tol = 1e-8;
    int m_threads = 0;
    for (auto* sc : {app.add_subcommand("sum", "direct character sum S_j(X,Y)"),
                     app.add_subcommand("predict", "main-term prediction"),
                     app.add_subcommand("compare", "direct sum vs predictions")}) {
        sc->add_option("--j", m_j)->check(CLI::IsMember({2, 3, 4}));
        sc->add_option("--X", m_X);
        sc->add_option("--Y", m_Y);
        sc->add_option("--U", m_U);
        sc->add_option("--quad-tol", m_tol);
        sc->add_option("--threads", m_threads);
    }

    // poisson-check
    auto* sc_poisson = app.add_subcommand("poisson-check", "two-sided Poisson identity");
    int p_j = 2;
    std::string p_n;
    double p_X = 50.0, p_U = 4.0, p_tol = 1e-8;
    int p_pmax = 12;
    sc_poisson->add_option("--j", p_j)->required()->check(CLI::IsMember({2, 3, 4}));
    sc_poisson->add_option("--n", p_n)->required();
    sc_poisson->add_option("--X", p_X);
    sc_poisson->add_option("--U", p_U);
    sc_poisson->add_option("--quad-tol", p_tol);
    sc_poisson->add_option("--p-max", p_pmax);

    // factor-check
    auto* sc_factor = app.add_subcommand("factor-check", "Gauss-sum Dirichlet series factorization");
    std::string f_k;
    double f_res = 2.0, f_ims = 0.0;
    std::int64_t f_T = 1000;
    sc_factor->add_option("--k", f_k)->required();
    sc_factor->add_option("--re-s", f_res);
    sc_factor->add_option("--im-s", f_ims);
    sc_factor->add_option("--T", f_T);

    // zeta
    auto* sc_zeta = app.add_subcommand("zeta", "Dedekind zeta at s=2");
    std::string z_field = "i";
    sc_zeta->add_option("--field", z_field)->check(CLI::IsMember({"i", "omega"}));

    // grid
    auto* sc_grid = app.add_subcommand("grid", "compare over a (j,X,Y) grid from a config file");
    std::string grid_path;
    sc_grid->add_option("--config", grid_path)->required();

    try {
        app.parse(argc, argv);

        if (sc_symbol->parsed()) return run_symbol(s_j, s_a, s_n);
        if (sc_gauss->parsed()) return run_gauss_sum(g_j, g_k, g_n, g_method);
        if (sc_tr->parsed()) {
            TransformEvaluator ev(t_field == "i" ? Field::gauss : Field::eisenstein, t_U, t_tol);
            double v = ev(t_t);
            std::printf("value: %s\n", fmt(v).c_str());
            if (t_ref) {
                double ref = ev.reference_2d(t_t);
                std::printf("reference_2d: %s\ndelta: %s\n", fmt(ref).c_str(),
                            fmt(std::abs(v - ref)).c_str());
            }
            return 0;
        }
        if (sc_count->parsed()) {
            LatticeFilter flt = c_filter == "primary" ? LatticeFilter::primary
                                : c_filter == "all" ? LatticeFilter::all
                                : c_filter == "coprime" ? LatticeFilter::coprime_to_ramified
                                                        : LatticeFilter::jth_power_primary;
            std::int64_t count = 0;
            if (c_ring == "gauss") {
                LatticeQuery<GaussInt> q{c_x, flt, c_j, 1};
                for_each_element<GaussInt>(q, [&](GaussInt, std::int64_t) { ++count; });
            } else {
                LatticeQuery<EisInt> q{c_x, flt, c_j, 1};
                for_each_element<EisInt>(q, [&](EisInt, std::int64_t) { ++count; });
            }
            std::printf("count: %lld\n", (long long)count);
            if (flt == LatticeFilter::primary) {
                auto pc = c_ring == "gauss" ? count_primary<GaussInt>(c_x)
                                            : count_primary<EisInt>(c_x);
                std::printf("main_coefficient: %s\nratio: %s\n",
                            fmt(pc.main_coefficient).c_str(), fmt(pc.ratio).c_str());
            }
            return 0;
        }
        auto make_cfg = [&]() {
            auto cfg = SumConfig::make(m_j, m_X, m_Y);
            cfg.U = m_U;
            cfg.quad_tol = m_tol;
            cfg.threads = m_threads;
            return cfg;
        };
        if (app.get_subcommand("sum")->parsed()) {
            auto cfg = make_cfg();
            DirectStats st;
            auto v = direct_sum(cfg, &st);
            std::printf("%s\nS: %s\nn_count: %lld\nm_count: %lld\n",
                        config_echo_csv(cfg).c_str(), fmt_complex(v).c_str(),
                        (long long)st.n_count, (long long)st.m_count);
            return 0;
        }
        if (app.get_subcommand("predict")->parsed()) {
            auto cfg = make_cfg();
            std::printf("main_term: %s\n", fmt(main_term(cfg)).c_str());
            return 0;
        }
        if (app.get_subcommand("compare")->parsed()) return run_compare(make_cfg(), format);
        if (sc_poisson->parsed()) {
            PoissonCheckResult r;
            if (ring_of_j(p_j) == 0)
                r = poisson_check(p_j, parse_elt<GaussInt>(p_n), p_X, p_U, p_tol, p_pmax);
            else
                r = poisson_check(p_j, parse_elt<EisInt>(p_n), p_X, p_U, p_tol, p_pmax);
            std::printf("lhs: %s\nrhs: %s\ndelta: %s\n", fmt_complex(r.lhs).c_str(),
                        fmt_complex(r.rhs).c_str(), fmt(r.delta).c_str());
            std::printf("truncation_norm: %lld\ntail_bound: %s\nerror_budget: %s\n",
                        (long long)r.truncation_norm, fmt(r.tail_bound).c_str(),
                        fmt(r.error_budget).c_str());
            return 0;
        }
        if (sc_factor->parsed()) {
            auto r = factorization_check(parse_elt<GaussInt>(f_k), {f_res, f_ims}, f_T);
            std::printf("lhs: %s\nrhs: %s\ndelta: %s\nk1: %s\nT: %lld\n",
                        fmt_complex(r.lhs).c_str(), fmt_complex(r.rhs).c_str(),
                        fmt(r.delta).c_str(), hecke::format(r.k1).c_str(), (long long)r.truncation);
            return 0;
        }
        if (sc_zeta->parsed()) {
            const auto& z = zeta2(z_field == "i" ? Field::gauss : Field::eisenstein);
            std::printf("value: %.12f\nideal_sum: %.12f\neuler_product: %.12f\nerror_bound: %s\n",
                        z.value, z.ideal_sum_value, z.euler_product_value,
                        fmt(z.error_bound).c_str());
            return 0;
        }
        if (sc_grid->parsed()) return run_grid(grid_path, format == "plain" ? "csv" : format);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "computation failed: %s\n", e.what());
        return 1;
    }
    return 0;
}
