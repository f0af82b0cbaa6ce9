// pybind11 bindings for the main operations.  Ring elements cross the
// boundary as canonical text ("a+bi" / "a+bw") or (a, b) tuples.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke/sums.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

template <class E>
E from_obj(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_elt<E>(o.cast<std::string>());
    auto t = o.cast<std::pair<std::int64_t, std::int64_t>>();
    return E{t.first, t.second};
}

template <class E>
py::tuple to_pair(E z) {
    return py::make_tuple(z.a, z.b);
}

bool gauss_ring(int j) { return j != 3; }

py::dict report_dict(const SumConfig& cfg, const SumReport& r) {
    py::dict d;
    d["j"] = r.j;
    d["X"] = r.X;
    d["Y"] = r.Y;
    d["U"] = r.U;
    d["S_re"] = r.direct.real();
    d["S_im"] = r.direct.imag();
    d["main_term"] = r.main_term;
    d["m0_term"] = r.m0_term;
    d["ratio"] = r.ratio;
    d["imag_fraction"] = r.imag_fraction;
    d["n_count"] = r.n_count;
    d["m_count"] = r.m_count;
    d["elapsed_ms"] = r.elapsed_ms;
    d["csv_row"] = csv_row(r);
    d["config_echo"] = config_echo_csv(cfg);
    return d;
}

SumConfig build_cfg(int j, double X, double Y, double U, double quad_tol, int threads) {
    auto cfg = SumConfig::make(j, X, Y);
    cfg.U = U;
    cfg.quad_tol = quad_tol;
    cfg.threads = threads;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "character sums over Z[i] and Z[omega]";

    m.def("norm", [](const py::object& z, const std::string& ring) {
        return ring == "gauss" ? norm(from_obj<GaussInt>(z)) : norm(from_obj<EisInt>(z));
    }, py::arg("z"), py::arg("ring") = "gauss");

    m.def("divmod", [](const py::object& x, const py::object& y, const std::string& ring) {
        if (ring == "gauss") {
            auto [q, r] = divmod(from_obj<GaussInt>(x), from_obj<GaussInt>(y));
            return py::make_tuple(to_pair(q), to_pair(r));
        }
        auto [q, r] = divmod(from_obj<EisInt>(x), from_obj<EisInt>(y));
        return py::make_tuple(to_pair(q), to_pair(r));
    }, py::arg("x"), py::arg("y"), py::arg("ring") = "gauss");

    m.def("gcd", [](const py::object& x, const py::object& y, const std::string& ring) {
        if (ring == "gauss")
            return py::object(to_pair(gcd(from_obj<GaussInt>(x), from_obj<GaussInt>(y))));
        return py::object(to_pair(gcd(from_obj<EisInt>(x), from_obj<EisInt>(y))));
    }, py::arg("x"), py::arg("y"), py::arg("ring") = "gauss");

    m.def("to_primary", [](const py::object& z, const std::string& ring) {
        if (ring == "gauss") {
            auto [u, p] = to_primary(from_obj<GaussInt>(z));
            return py::make_tuple(to_pair(u), to_pair(p));
        }
        auto [u, p] = to_primary(from_obj<EisInt>(z));
        return py::make_tuple(to_pair(u), to_pair(p));
    }, py::arg("z"), py::arg("ring") = "gauss");

    m.def("factor", [](const py::object& z, const std::string& ring) {
        py::dict d;
        if (ring == "gauss") {
            auto f = factor(from_obj<GaussInt>(z));
            d["unit"] = to_pair(f.unit);
            d["ramified_exponent"] = f.ramified_exponent;
            py::list fs;
            for (auto& [p, e] : f.factors) fs.append(py::make_tuple(to_pair(p), e));
            d["factors"] = fs;
        } else {
            auto f = factor(from_obj<EisInt>(z));
            d["unit"] = to_pair(f.unit);
            d["ramified_exponent"] = f.ramified_exponent;
            py::list fs;
            for (auto& [p, e] : f.factors) fs.append(py::make_tuple(to_pair(p), e));
            d["factors"] = fs;
        }
        return d;
    }, py::arg("z"), py::arg("ring") = "gauss");

    m.def("euler_phi", [](const py::object& z, const std::string& ring) {
        return ring == "gauss" ? euler_phi(from_obj<GaussInt>(z))
                               : euler_phi(from_obj<EisInt>(z));
    }, py::arg("z"), py::arg("ring") = "gauss");

    m.def("mobius", [](const py::object& z, const std::string& ring) {
        return ring == "gauss" ? mobius(from_obj<GaussInt>(z)) : mobius(from_obj<EisInt>(z));
    }, py::arg("z"), py::arg("ring") = "gauss");

    m.def("symbol", [](int j, const py::object& a, const py::object& n) {
        SymbolValue s = gauss_ring(j)
            ? symbol(j, from_obj<GaussInt>(a), from_obj<GaussInt>(n))
            : symbol(j, from_obj<EisInt>(a), from_obj<EisInt>(n));
        py::dict d;
        d["order"] = s.order;
        d["exponent"] = s.is_zero() ? py::object(py::none()) : py::object(py::int_(s.exp));
        d["value"] = s.value();
        return d;
    }, py::arg("j"), py::arg("a"), py::arg("n"));

    m.def("gauss_sum", [](int j, const py::object& r, const py::object& n,
                          const std::string& method) {
        std::complex<double> v;
        if (gauss_ring(j)) {
            auto k = from_obj<GaussInt>(r);
            auto nn = from_obj<GaussInt>(n);
            v = (method == "explicit" && j == 2) ? gauss_sum_explicit_q2(k, nn).v
                                                 : gauss_sum(j, k, nn).v;
        } else {
            v = gauss_sum(j, from_obj<EisInt>(r), from_obj<EisInt>(n)).v;
        }
        return v;
    }, py::arg("j"), py::arg("r"), py::arg("n"), py::arg("method") = "brute");

    m.def("transform", [](const std::string& field, double t, double U, double quad_tol) {
        TransformEvaluator ev(field == "i" ? Field::gauss : Field::eisenstein, U, quad_tol);
        return ev(t);
    }, py::arg("field"), py::arg("t"), py::arg("U"), py::arg("quad_tol") = 1e-8);

    m.def("count_primary", [](const std::string& ring, std::int64_t x) {
        auto c = ring == "gauss" ? count_primary<GaussInt>(x) : count_primary<EisInt>(x);
        py::dict d;
        d["count"] = c.count;
        d["main_coefficient"] = c.main_coefficient;
        d["ratio"] = c.ratio;
        return d;
    }, py::arg("ring"), py::arg("x"));

    m.def("zeta2", [](const std::string& field) {
        const auto& z = zeta2(field == "i" ? Field::gauss : Field::eisenstein);
        py::dict d;
        d["value"] = z.value;
        d["ideal_sum"] = z.ideal_sum_value;
        d["euler_product"] = z.euler_product_value;
        d["error_bound"] = z.error_bound;
        return d;
    }, py::arg("field"));

    m.def("direct_sum", [](int j, double X, double Y, double U, double quad_tol, int threads) {
        return direct_sum(build_cfg(j, X, Y, U, quad_tol, threads));
    }, py::arg("j"), py::arg("X"), py::arg("Y"), py::arg("U") = 0.0,
       py::arg("quad_tol") = 1e-8, py::arg("threads") = 0);

    m.def("main_term", [](int j, double X, double Y) {
        return main_term(SumConfig::make(j, X, Y));
    }, py::arg("j"), py::arg("X"), py::arg("Y"));

    m.def("m0_term", [](int j, double X, double Y, double U) {
        auto cfg = SumConfig::make(j, X, Y);
        cfg.U = U;
        return m0_term(cfg);
    }, py::arg("j"), py::arg("X"), py::arg("Y"), py::arg("U") = 0.0);

    m.def("compare", [](int j, double X, double Y, double U, double quad_tol, int threads) {
        auto cfg = build_cfg(j, X, Y, U, quad_tol, threads);
        return report_dict(cfg, compare(cfg));
    }, py::arg("j"), py::arg("X"), py::arg("Y"), py::arg("U") = 0.0,
       py::arg("quad_tol") = 1e-8, py::arg("threads") = 0);

    m.def("poisson_check", [](int j, const py::object& n, double X, double U,
                              double quad_tol, int p_max) {
        PoissonCheckResult r = gauss_ring(j)
            ? poisson_check(j, from_obj<GaussInt>(n), X, U, quad_tol, p_max)
            : poisson_check(j, from_obj<EisInt>(n), X, U, quad_tol, p_max);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["delta"] = r.delta;
        d["truncation_norm"] = r.truncation_norm;
        d["tail_bound"] = r.tail_bound;
        d["error_budget"] = r.error_budget;
        return d;
    }, py::arg("j"), py::arg("n"), py::arg("X"), py::arg("U"),
       py::arg("quad_tol") = 1e-8, py::arg("p_max") = 12);

    m.def("factorization_check", [](const py::object& k, std::complex<double> s,
                                    std::int64_t T) {
        auto r = factorization_check(from_obj<GaussInt>(k), s, T);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["delta"] = r.delta;
        d["k1"] = to_pair(r.k1);
        return d;
    }, py::arg("k"), py::arg("s"), py::arg("T"));

    m.def("format_elt", [](std::int64_t a, std::int64_t b, const std::string& ring) {
        return ring == "gauss" ? format(GaussInt{a, b}) : format(EisInt{a, b});
    }, py::arg("a"), py::arg("b"), py::arg("ring") = "gauss");
}
