#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <semiform/box_partitions.hpp>
#include <semiform/diagram_oracle.hpp>
#include <semiform/errors.hpp>
#include <semiform/invariant_space.hpp>
#include <semiform/operators.hpp>
#include <semiform/poly_json.hpp>

#include "cli.hpp"

namespace py = pybind11;
using namespace semiform;

namespace
{

// Arbitrary-precision integers cross the boundary as Python ints.
py::int_ to_py(const Integer &z)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10)));
}

py::list to_py(const std::vector<Integer> &v)
{
    py::list out;
    for (const auto &z : v) {
        out.append(to_py(z));
    }
    return out;
}

py::object fraction(const Rational &q)
{
    static const auto Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(to_py(q.get_num()), to_py(q.get_den()));
}

Op parse_op(const std::string &s)
{
    if (s == "D") {
        return Op::D;
    }
    if (s == "Delta") {
        return Op::Delta;
    }
    throw std::invalid_argument("operator must be 'D' or 'Delta'");
}

ShearDirection parse_dir(const std::string &s)
{
    if (s == "h" || s == "horizontal") {
        return ShearDirection::horizontal;
    }
    if (s == "v" || s == "vertical") {
        return ShearDirection::vertical;
    }
    throw std::invalid_argument("direction must be 'h' or 'v'");
}

BoxPartition partition(const std::vector<unsigned> &parts, unsigned k, unsigned n)
{
    return BoxPartition(parts, k, n);
}

py::dict report_dict(const SylvesterReport &r)
{
    py::dict d;
    d["n"] = r.sig.n;
    d["k"] = r.sig.k;
    d["m"] = r.sig.m;
    d["p"] = to_py(r.p_m);
    d["p_prev"] = to_py(r.p_prev);
    d["delta"] = to_py(r.delta);
    d["rank_D"] = r.rank_D;
    d["nullity_D"] = r.nullity_D;
    d["surjective"] = r.surjective;
    d["rank_Delta"] = r.rank_Delta;
    d["injective"] = r.injective;
    d["chain_dims"] = r.chain_dims;
    d["kernel_dims"] = r.kernel_dims;
    d["telescopes"] = r.telescopes;
    d["ok"] = r.ok();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact semi-invariants of binary forms";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_ArithmeticError);
    py::register_exception<ContextMismatch>(m, "ContextMismatch", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](unsigned n, const std::string &text) { return Polynomial::parse(n, text); }), py::arg("n"),
             py::arg("text") = "0")
        .def_static("from_json", [](const std::string &text) { return load_polynomial(text); })
        .def("to_json", [](const Polynomial &p) { return dump_polynomial(p); })
        .def_property_readonly("n", &Polynomial::context_n)
        .def("is_zero", &Polynomial::is_zero)
        .def("__len__", &Polynomial::term_count)
        .def("terms",
             [](const Polynomial &p) {
                 py::list out;
                 for (const auto &[mono, c] : p.terms()) {
                     std::vector<unsigned> e(mono.exponents().begin(), mono.exponents().end());
                     out.append(py::make_tuple(e, fraction(c)));
                 }
                 return out;
             })
        .def("homogeneity",
             [](const Polynomial &p) -> py::object {
                 const auto h = homogeneity(p);
                 if (!h) {
                     return py::none();
                 }
                 return py::make_tuple(h->degree, h->weight);
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial &p) { return "Polynomial(" + std::to_string(p.context_n()) + ", '" + p.to_string() + "')"; });

    m.def("apply_D", &apply_D);
    m.def("apply_Delta", &apply_Delta);
    m.def(
        "operator_power", [](const std::string &op, unsigned i, const Polynomial &p) { return operator_power(parse_op(op), i, p); },
        py::arg("op"), py::arg("i"), py::arg("p"));
    m.def(
        "shear_expand", [](const Polynomial &p, const std::string &dir) { return shear_expand(p, parse_dir(dir)).coefficients; },
        py::arg("p"), py::arg("direction") = "h");
    m.def(
        "taylor_check", [](const Polynomial &p, const std::string &dir) { return taylor_check(p, parse_dir(dir)).ok; },
        py::arg("p"), py::arg("direction") = "h");
    m.def("hilbert_residual", [](const std::vector<unsigned> &parts, unsigned k, unsigned n, unsigned i) {
        return hilbert_commutator_residual(partition(parts, k, n), i);
    });
    m.def("second_hilbert_residual", [](const std::vector<unsigned> &parts, unsigned k, unsigned n, unsigned i) {
        return second_hilbert_residual(partition(parts, k, n), i);
    });
    m.def("cayley_check",
          [](const Polynomial &I, unsigned k, unsigned weight, unsigned i) {
              return cayley_check(I, {I.context_n(), k, weight}, i);
          },
          py::arg("I"), py::arg("k"), py::arg("m"), py::arg("i"));

    m.def("enumerate_box_partitions", [](unsigned k, unsigned n, unsigned weight) {
        std::vector<std::vector<unsigned>> out;
        for (const auto &lambda : enumerate_box_partitions(k, n, weight)) {
            out.push_back(lambda.parts());
        }
        return out;
    });
    m.def("count_p", [](unsigned k, unsigned n, long weight) { return to_py(count_p(k, n, weight)); });
    m.def("gaussian_coefficient", [](unsigned n, unsigned k) { return to_py(gaussian_coefficient(n, k).coeffs); });
    m.def("delta", [](unsigned k, unsigned n, unsigned weight) { return to_py(delta(k, n, weight)); });
    m.def("delta_table", [](unsigned n, unsigned k) { return to_py(delta_table(n, k).values); });
    m.def("strict_unimodality_report", [](unsigned n, unsigned k) {
        const auto r = strict_unimodality_report(n, k);
        py::dict d;
        d["violations"] = r.violations;
        d["strictly_unimodal"] = r.strictly_unimodal;
        d["unimodal"] = r.unimodal;
        return d;
    });

    m.def("oracle_weight_sum", [](const std::vector<unsigned> &parts, unsigned k, unsigned n, unsigned i, const std::string &mode) {
        if (mode != "minus" && mode != "plus") {
            throw std::invalid_argument("mode must be 'minus' or 'plus'");
        }
        return oracle_weight_sum(partition(parts, k, n), i, mode == "minus" ? MarkMode::minus : MarkMode::plus);
    });
    m.def("commutator_census", [](const std::vector<unsigned> &parts, unsigned k, unsigned n, unsigned i) {
        const auto c = commutator_census(partition(parts, k, n), i);
        py::dict d;
        d["c"] = c.c;
        d["pm_factor"] = c.pm_factor;
        d["mp_factor"] = c.mp_factor;
        d["difference_factor"] = c.difference_factor;
        d["ok"] = c.ok();
        return d;
    });

    m.def("basis_Q", [](unsigned n, unsigned k, unsigned weight) {
        std::vector<std::string> out;
        for (const auto &mono : basis_Q({n, k, weight}).monomials) {
            out.push_back(mono.to_string());
        }
        return out;
    });
    m.def("semi_invariant_basis", [](unsigned n, unsigned k, unsigned weight) {
        return semi_invariant_basis({n, k, weight}).polynomials;
    });
    m.def("span_contains", [](const std::vector<Polynomial> &basis, const Polynomial &p) {
        if (basis.empty()) {
            return p.is_zero();
        }
        const auto h = homogeneity(basis.front());
        if (!h) {
            throw std::invalid_argument("basis elements must be homogeneous");
        }
        return span_contains({{p.context_n(), h->degree, h->weight}, basis, true}, p);
    });
    m.def(
        "is_semi_invariant",
        [](const Polynomial &p, const std::string &mode) {
            if (mode == "operator") {
                return is_semi_invariant(p, SemiInvariantTest::by_operator);
            }
            if (mode == "shear") {
                return is_semi_invariant(p, SemiInvariantTest::by_shear);
            }
            throw std::invalid_argument("mode must be 'operator' or 'shear'");
        },
        py::arg("p"), py::arg("mode") = "operator");
    m.def("sylvester_report", [](unsigned n, unsigned k, unsigned weight) { return report_dict(sylvester_report(n, k, weight)); });
    m.def("additivity_witness", [](unsigned n, unsigned k1, unsigned k2, unsigned weight) {
        const auto w = additivity_witness(n, k1, k2, weight);
        py::dict d;
        d["m1"] = w.m1;
        d["m2"] = w.m2;
        d["branch"] = w.branch;
        d["first"] = w.first;
        d["second"] = w.second;
        d["result"] = w.result;
        return d;
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const auto r = cli::dispatch(args, out, err);
            return py::make_tuple(r.exit_code, out.str(), err.str());
        },
        "Run a command line; returns (exit_code, stdout, stderr).");
}
