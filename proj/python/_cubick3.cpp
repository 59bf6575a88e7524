#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubick3/conditions.hpp"
#include "cubick3/error.hpp"
#include "cubick3/mukai.hpp"
#include "cubick3/pell.hpp"
#include "cubick3/serialize.hpp"
#include "cubick3/standard_lattices.hpp"
#include "cubick3/verify.hpp"

namespace py = pybind11;
using namespace cubick3;

namespace {

py::object to_py(mpz_class const & x)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

mpz_class from_py(py::handle h)
{
    if (!PyLong_Check(h.ptr()))
        throw py::type_error("expected an int");
    return mpz_class(py::str(h).cast<std::string>());
}

py::object fraction(mpq_class const & x)
{
    static py::object const cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_py(x.get_num()), to_py(x.get_den()));
}

mpq_class rational_from_py(py::handle h)
{
    if (PyLong_Check(h.ptr()))
        return mpq_class(from_py(h));
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
        mpq_class q(from_py(h.attr("numerator")), from_py(h.attr("denominator")));
        q.canonicalize();
        return q;
    }
    return mpq_class(py::str(h).cast<std::string>());
}

py::object json_to_py(Json const & j)
{
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list l;
        for (auto const & x : j)
            l.append(json_to_py(x));
        return std::move(l);
    }
    case Json::value_t::object: {
        py::dict d;
        for (auto const & [k, v] : j.items())
            d[py::str(k)] = json_to_py(v);
        return std::move(d);
    }
    default: return py::none();
    }
}

py::object pair_or_none(std::optional<std::pair<mpz_class, mpz_class>> const & p)
{
    if (!p)
        return py::none();
    return py::make_tuple(to_py(p->first), to_py(p->second));
}

py::object witness_or_none(std::optional<Witness> const & w)
{
    if (!w)
        return py::none();
    return py::make_tuple(to_py(w->n), to_py(w->a));
}

GramLattice lattice_arg(py::handle h)
{
    if (py::isinstance<py::str>(h))
        return standard_lattice(h.cast<std::string>());
    std::vector<std::vector<py::object>> rows;
    for (auto row : h) {
        std::vector<py::object> r;
        for (auto x : row)
            r.push_back(py::reinterpret_borrow<py::object>(x));
        rows.push_back(std::move(r));
    }
    IntMatrix g(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw LatticeError(ErrorKind::InvalidGram, "gram must be square");
        for (std::size_t k = 0; k < rows.size(); ++k)
            g(i, k) = from_py(rows[i][k]);
    }
    return GramLattice(std::move(g));
}

py::list coh_to_py(CohClass const & a)
{
    py::list l;
    for (std::size_t i = 0; i < 5; ++i)
        l.append(fraction(a[i]));
    return l;
}

CohClass coh_from_py(py::sequence const & s)
{
    if (s.size() != 5)
        throw py::value_error("a class has five coefficients");
    CohClass a;
    for (std::size_t i = 0; i < 5; ++i)
        a[i] = rational_from_py(s[i]);
    return a;
}

} // namespace

PYBIND11_MODULE(_cubick3, m)
{
    m.doc() = "Exact lattice computations for cubic fourfolds and K3 surfaces";

    py::register_exception<LatticeError>(m, "LatticeError", PyExc_ValueError);

    m.def("classify", [](long d) { return json_to_py(to_json(classify(d))); }, py::arg("d"));
    m.def("condition_flags", [](long d) { return json_to_py(to_json(condition_flags(d))); }, py::arg("d"));
    m.def(
        "table", [](long max_d, long from) { return json_to_py(table_json(table(max_d, from))); },
        py::arg("max_d"), py::arg("from_d") = 8);
    m.def("table_csv", [](long max_d, long from) { return table_csv(table(max_d, from)); }, py::arg("max_d"),
          py::arg("from_d") = 8);

    m.def("a2_represents", &a2_represents, py::arg("d"), py::arg("primitive"));
    m.def("a2_bruteforce", [](long d) {
        py::list l;
        for (auto const & v : a2_bruteforce(d))
            l.append(py::make_tuple(v.x, v.y, v.primitive));
        return l;
    });
    m.def("witness_ss", [](long d) { return witness_or_none(witness_ss(d)); });
    m.def("witness_sss", [](long d) { return witness_or_none(witness_sss(d)); });
    m.def("pell_brakkee", [](long d) { return pair_or_none(pell_brakkee(d).solution); });
    m.def("solve_generalized_pell",
          [](py::int_ D, py::int_ N) { return pair_or_none(solve_generalized_pell(from_py(D), from_py(N))); });
    m.def("boundary_count", &boundary_count);
    m.def("genus_compare", [](long d) { return genus_compare(d); });

    m.def("gram", [](py::object l) { return json_to_py(to_json(lattice_arg(l).gram())); });
    m.def("determinant", [](py::object l) { return to_py(determinant(lattice_arg(l))); });
    m.def("signature", [](py::object l) {
        Signature const s = signature(lattice_arg(l));
        return py::make_tuple(s.pos, s.neg, s.null);
    });
    m.def("disc_group", [](py::object l) { return json_to_py(to_json(disc_group(lattice_arg(l)))); });
    m.def("hassett_triple", [](long d) { return json_to_py(to_json(hassett_triple(d))); });

    m.def("sqrt_todd", [] { return coh_to_py(characteristic_classes().sqrt_todd); });
    m.def("todd", [] { return coh_to_py(characteristic_classes().todd); });
    m.def("chern", [] { return coh_to_py(characteristic_classes().chern); });
    m.def("mukai_vector_line", [](long k) { return coh_to_py(mukai_vector_line(k)); });
    m.def("mukai_pairing", [](py::sequence a, py::sequence b) {
        return fraction(mukai_pairing(coh_from_py(a), coh_from_py(b)));
    });
    m.def("project_right", [](py::sequence a) { return coh_to_py(project_right(coh_from_py(a))); });
    m.def("euler_line", [](long k) { return to_py(euler_line(k)); });
    m.def("mukai_set", [] {
        MukaiSet const s = mukai_set();
        py::dict d;
        d["w0"] = coh_to_py(s.w0);
        d["w1"] = coh_to_py(s.w1);
        d["w2"] = coh_to_py(s.w2);
        d["u1"] = coh_to_py(s.u1);
        d["u2"] = coh_to_py(s.u2);
        d["vLambda1"] = coh_to_py(s.vl1);
        d["vLambda2"] = coh_to_py(s.vl2);
        return d;
    });
    m.def("a2_mukai_gram", [] {
        py::list g;
        for (auto const & row : a2_mukai_gram()) {
            py::list r;
            for (auto const & x : row)
                r.append(fraction(x));
            g.append(r);
        }
        return g;
    });

    m.def("verify", [] {
        VerifySummary const s = run_verify();
        py::list failures;
        for (auto const & c : s.failures())
            failures.append(py::make_tuple(c.id, c.expected, c.actual));
        py::dict d;
        d["checks_run"] = s.checks_run();
        d["failures"] = failures;
        return d;
    });
}
