#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadres/core_arith.hpp"
#include "quadres/diophantine.hpp"
#include "quadres/error.hpp"
#include "quadres/gaussian.hpp"
#include "quadres/quad_congruence.hpp"
#include "quadres/sqrt_mod.hpp"
#include "quadres/symbols.hpp"
#include "quadres/two_squares.hpp"

namespace py = pybind11;
using quadres::Int;

// Python int <-> cpp_int through decimal text.
namespace pybind11::detail {
template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        if (!PyLong_Check(src.ptr())) {
            if (!convert || !PyIndex_Check(src.ptr())) return false;
        }
        object as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
        if (!as_int) {
            PyErr_Clear();
            return false;
        }
        const auto text = str(as_int).cast<std::string>();
        value = Int(text);
        return true;
    }

    static handle cast(const Int& src, return_value_policy, handle) {
        const std::string text = src.str();
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace quadres;

std::vector<Int> residues(const ResidueSet& r) { return r.residues; }

py::tuple rep_tuple(const TwoSquareRep& r) { return py::make_tuple(r.a, r.b); }

py::list rep_list(const std::vector<TwoSquareRep>& reps) {
    py::list out;
    for (const auto& r : reps) out.append(rep_tuple(r));
    return out;
}

py::tuple triple_tuple(const PythTriple& t) { return py::make_tuple(t.s, t.t, t.r); }

GaussianInt gaussian_from(const py::object& obj) {
    if (py::isinstance<GaussianInt>(obj)) return obj.cast<GaussianInt>();
    if (py::isinstance<py::str>(obj)) {
        const auto parsed = parse_gaussian(obj.cast<std::string>());
        if (!parsed) throw py::value_error("not a Gaussian integer: " + obj.cast<std::string>());
        return *parsed;
    }
    return GaussianInt(obj.cast<Int>());
}

}  // namespace

PYBIND11_MODULE(_quadres, m) {
    m.doc() = "Quadratic residues, Gaussian integers and sums of squares over exact integers";

    py::register_exception<MathError>(m, "MathError", PyExc_ValueError);

    m.def("ext_gcd", [](const Int& a, const Int& b) {
        const ExtGcd r = ext_gcd(a, b);
        return py::make_tuple(r.g, r.s, r.t);
    });
    m.def("gcd", py::overload_cast<const Int&, const Int&>(&quadres::gcd));
    m.def("mod_inverse", &mod_inverse);
    m.def("mod_pow", &mod_pow);
    m.def("is_prime", &is_prime);
    m.def("factorize", [](const Int& n) {
        const Factorization f = factorize(n);
        std::vector<std::pair<Int, unsigned>> out;
        for (const auto& pp : f.factors) out.emplace_back(pp.prime, pp.exponent);
        return py::make_tuple(f.sign, out);
    }, "Returns (sign, [(prime, exponent), ...]).");
    m.def("crt_combine", [](const std::vector<std::pair<Int, std::vector<Int>>>& parts) {
        std::vector<CrtComponent> comps;
        for (const auto& [modulus, rs] : parts) comps.push_back({modulus, rs});
        const ResidueSet r = crt_combine(comps);
        return py::make_tuple(r.modulus, r.residues);
    }, "Takes [(modulus, [residues]), ...]; returns (modulus, residues).");

    m.def("legendre", [](const Int& a, const Int& p, const std::string& method) {
        if (method == "euler") return to_int(legendre_euler(a, p));
        if (method == "gauss-lemma") return to_int(legendre_gauss_lemma(a, p));
        throw py::value_error("method must be 'euler' or 'gauss-lemma'");
    }, py::arg("a"), py::arg("p"), py::arg("method") = "euler");
    m.def("jacobi", [](const Int& a, const Int& n) { return to_int(jacobi(a, n)); });
    m.def("jacobi_by_definition", [](const Int& a, const Int& n) { return to_int(jacobi_by_definition(a, n)); });

    m.def("sqrt_mod", [](const Int& a, const Int& n) { return residues(sqrt_mod(a, n)); });
    m.def("sqrt_mod_general", [](const Int& a, const Int& n) { return residues(sqrt_mod_general(a, n)); });
    m.def("is_quadratic_residue", &is_quadratic_residue);

    m.def("solve_linear", [](const Int& a, const Int& b, const Int& n) { return residues(solve_linear(a, b, n)); });
    m.def("solve_quadratic", [](const Int& a, const Int& b, const Int& c, const Int& n, bool coprime) {
        const QuadCongruence q(a, b, c, n);
        return residues(coprime ? solve_quadratic_coprime(q) : solve_quadratic(q));
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"), py::arg("coprime") = false);

    py::class_<GaussianInt>(m, "Gaussian")
        .def(py::init([](const Int& re, const Int& im) { return GaussianInt(re, im); }),
             py::arg("re"), py::arg("im") = 0)
        .def(py::init([](const std::string& text) {
            const auto parsed = parse_gaussian(text);
            if (!parsed) throw py::value_error("not a Gaussian integer: " + text);
            return *parsed;
        }))
        .def_readonly("re", &GaussianInt::re)
        .def_readonly("im", &GaussianInt::im)
        .def("conj", &GaussianInt::conj)
        .def("norm", [](const GaussianInt& z) { return norm(z); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const GaussianInt& z, unsigned e) { return pow(z, e); })
        .def("__hash__", [](const GaussianInt& z) { return py::hash(py::make_tuple(z.re, z.im)); })
        .def("__str__", [](const GaussianInt& z) { return to_string(z); })
        .def("__repr__", [](const GaussianInt& z) { return "Gaussian('" + to_string(z) + "')"; });

    m.def("gaussian_norm", [](const py::object& z) { return norm(gaussian_from(z)); });
    m.def("div_rem", [](const py::object& a, const py::object& b) {
        const GaussianDivRem r = div_rem(gaussian_from(a), gaussian_from(b));
        return py::make_tuple(r.quotient, r.remainder);
    });
    m.def("gaussian_gcd", [](const py::object& a, const py::object& b) {
        return quadres::gcd(gaussian_from(a), gaussian_from(b));
    });
    m.def("is_gaussian_prime", [](const py::object& z) { return is_gaussian_prime(gaussian_from(z)); });
    m.def("canonical_associate", [](const py::object& z) { return canonical_associate(gaussian_from(z)); });
    m.def("gaussian_factor", [](const py::object& z) {
        const GaussianFactorization f = factor(gaussian_from(z));
        std::vector<std::pair<GaussianInt, unsigned>> out;
        for (const auto& pp : f.factors) out.emplace_back(pp.prime, pp.exponent);
        return py::make_tuple(f.unit, out);
    }, "Returns (unit, [(prime, exponent), ...]) with canonical primes in norm order.");

    m.def("is_sum_of_two_squares", &is_sum_of_two_squares);
    m.def("has_primitive_representation", &has_primitive_representation);
    m.def("represent_prime", [](const Int& p) { return rep_tuple(represent_prime(p)); });
    m.def("rep_from_root", [](const Int& k, const Int& n) { return rep_tuple(rep_from_root(k, n)); });
    m.def("count_representations", &count_representations);
    m.def("all_representations", [](const Int& n) { return rep_list(all_representations(n)); });
    m.def("primitive_representations", [](const Int& n) { return rep_list(primitive_representations(n)); });

    m.def("pyth_triple", [](const Int& mm, const Int& n) { return triple_tuple(pyth_triple(mm, n)); });
    m.def("enumerate_primitive_triples", [](const Int& r_max) {
        py::list out;
        for (const auto& t : enumerate_primitive_triples(r_max)) out.append(triple_tuple(t));
        return out;
    });
    m.def("cz2_solvable", &cz2_solvable);
    m.def("cz2_solution", [](const Int& c, const Int& d3, const Int& u, const Int& v, unsigned g,
                             const Int& tm, const Int& tn) {
        const CZ2Solution s = cz2_solution(c, d3, u, v, g, pyth_triple(tm, tn));
        return py::make_tuple(s.x, s.y, s.z, s.primitive);
    }, py::arg("c"), py::arg("d3"), py::arg("u"), py::arg("v"), py::arg("g"), py::arg("m"), py::arg("n"),
       "Returns (x, y, z, primitive) for x^2 + y^2 = c z^2.");
    m.def("zl_solution", [](unsigned l, const Int& a, const Int& b) {
        const ZlSolution s = zl_solution(l, a, b);
        return py::make_tuple(s.x, s.y, s.z);
    });
    m.def("vn_poly", &vn_poly);
    m.def("rn_poly", &rn_poly);
    m.def("pyth_quadruple", [](const Int& mm, const Int& n, const Int& u, const Int& v) {
        const PythQuadruple q = pyth_quadruple(mm, n, u, v);
        return py::make_tuple(q.x, q.y, q.z, q.w, q.primitive);
    });
    m.def("enumerate_quadruples", [](const Int& w_max) {
        py::list out;
        for (const auto& q : enumerate_quadruples(w_max)) out.append(py::make_tuple(q.x, q.y, q.z, q.w));
        return out;
    });
}
