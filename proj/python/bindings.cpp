#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopforge/enumeration.hpp"
#include "loopforge/isomorphy.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/loop.hpp"
#include "loopforge/properties.hpp"
#include "loopforge/theorems.hpp"

namespace py = pybind11;
using namespace loopforge;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
        case value_t::null: return py::none();
        case value_t::boolean: return py::bool_(j.get<bool>());
        case value_t::number_integer: return py::int_(j.get<long long>());
        case value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case value_t::number_float: return py::float_(j.get<double>());
        case value_t::string: return py::str(j.get<std::string>());
        case value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

nlohmann::json py_to_json(const py::handle& obj) {
    return nlohmann::json::parse(py::str(py::module_::import("json").attr("dumps")(obj)).cast<std::string>());
}

py::object quasigroup_or_loop(const Quasigroup& q) {
    if (q.is_loop()) return py::cast(q.as_loop());
    return py::cast(q);
}

}  // namespace

PYBIND11_MODULE(loopforge, m) {
    m.doc() = "finite loop/quasigroup toolkit: inverse properties, isotopes, T conditions, "
              "enumeration and claim verification";

    // Translators run newest-first, so the base comes first and the most
    // derived types last.
    py::register_exception<Error>(m, "LoopError", PyExc_RuntimeError);
    py::register_exception<LatinViolation>(m, "LatinViolationError", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<DegreeMismatch>(m, "DegreeMismatchError", PyExc_ValueError);
    py::register_exception<OrderTooLarge>(m, "OrderTooLargeError", PyExc_ValueError);
    py::register_exception<UnknownClaim>(m, "UnknownClaimError", PyExc_KeyError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("image"))
        .def_static("identity", &Permutation::identity, py::arg("degree"))
        .def_property_readonly("degree", &Permutation::degree)
        .def("__getitem__", [](const Permutation& p, int x) {
            if (x < 0 || x >= p.degree()) throw py::index_error();
            return p[x];
        })
        .def("__len__", &Permutation::degree)
        .def("image", &Permutation::image)
        .def("is_identity", &Permutation::is_identity)
        .def("inverse", &Permutation::inverse)
        .def("then", &Permutation::then, py::arg("q"), "left-to-right composition")
        .def("pow", &Permutation::pow, py::arg("m"))
        .def("cycles", &Permutation::cycles)
        .def("cycle_type", &Permutation::cycle_type)
        .def("order", &Permutation::order)
        .def("fixed_points", &Permutation::fixed_points)
        .def("commutes_with", &Permutation::commutes_with)
        .def(py::self == py::self)
        .def(py::self * py::self)
        .def("__repr__", [](const Permutation& p) {
            return "Permutation(" + p.to_cycle_string() + ")";
        });

    py::class_<Quasigroup>(m, "Quasigroup")
        .def_static("from_rows", &Quasigroup::from_rows, py::arg("rows"))
        .def_property_readonly("order", &Quasigroup::order)
        .def("at", &Quasigroup::at, py::arg("x"), py::arg("y"))
        .def_property_readonly("identity", [](const Quasigroup& q) -> py::object {
            if (auto e = q.identity()) return py::int_(*e);
            return py::none();
        })
        .def("is_loop", &Quasigroup::is_loop)
        .def("as_loop", &Quasigroup::as_loop)
        .def("rows", &Quasigroup::rows)
        .def(py::self == py::self);

    py::class_<FiniteLoop>(m, "FiniteLoop")
        .def_static("from_rows", &FiniteLoop::from_rows, py::arg("rows"))
        .def_property_readonly("order", &FiniteLoop::order)
        .def_property_readonly("identity", &FiniteLoop::identity)
        .def("mul", &FiniteLoop::mul, py::arg("x"), py::arg("y"))
        .def("left_divide", &FiniteLoop::left_divide, py::arg("x"), py::arg("b"))
        .def("right_divide", &FiniteLoop::right_divide, py::arg("b"), py::arg("x"))
        .def("left_translation", &FiniteLoop::left_translation, py::arg("x"))
        .def("right_translation", &FiniteLoop::right_translation, py::arg("x"))
        .def("j_rho", &FiniteLoop::j_rho)
        .def("j_lambda", &FiniteLoop::j_lambda)
        .def("rho", &FiniteLoop::rho, py::arg("x"))
        .def("lam", &FiniteLoop::lambda, py::arg("x"))
        .def("has_two_sided_inverses", &FiniteLoop::has_two_sided_inverses)
        .def("rows", &FiniteLoop::rows)
        .def("to_text", [](const FiniteLoop& L) { return to_loop_text(L); })
        .def(py::self == py::self)
        .def("__repr__", [](const FiniteLoop& L) {
            return "FiniteLoop(order=" + std::to_string(L.order()) + ")";
        });

    m.def("from_table", [](const std::vector<std::vector<int>>& rows) {
        return quasigroup_or_loop(Quasigroup::from_rows(rows));
    }, py::arg("rows"), "validate a Cayley table; returns FiniteLoop when a two-sided identity exists, else Quasigroup");
    m.def("loop_from_text", &loop_from_text, py::arg("text"));
    m.def("to_loop_text", &to_loop_text, py::arg("loop"));
    m.def("compose", &compose, py::arg("p"), py::arg("q"));
    m.def("inverse_maps", &inverse_maps, py::arg("loop"));

    // properties ------------------------------------------------------------
    py::class_<PropertyReport>(m, "PropertyReport")
        .def_readonly("property", &PropertyReport::property)
        .def_readonly("holds", &PropertyReport::holds)
        .def_readonly("witness", &PropertyReport::witness)
        .def("to_dict", [](const PropertyReport& r) { return json_to_py(r.to_json()); })
        .def("__bool__", [](const PropertyReport& r) { return r.holds; })
        .def("__repr__", [](const PropertyReport& r) {
            return "PropertyReport(" + r.property + (r.holds ? ": holds)" : ": fails)");
        });

    py::enum_<WipMethod>(m, "WipMethod")
        .value("definitional", WipMethod::definitional)
        .value("translational", WipMethod::translational);

    m.def("has_wip", &has_wip, py::arg("loop"), py::arg("method") = WipMethod::definitional);
    m.def("wip_lambda_form", &wip_lambda_form, py::arg("loop"));
    m.def("wip_implication_form", &wip_implication_form, py::arg("loop"));
    m.def("has_cip", &has_cip, py::arg("loop"));
    m.def("has_lip", &has_lip, py::arg("loop"));
    m.def("has_rip", &has_rip, py::arg("loop"));
    m.def("has_ip", &has_ip, py::arg("loop"));
    m.def("m_inverse_check", &m_inverse_check, py::arg("loop"), py::arg("m"));
    m.def("centrum", &centrum, py::arg("loop"));
    m.def("nuclei", [](const FiniteLoop& L) {
        auto ns = nuclei(L);
        return py::make_tuple(ns.left, ns.middle, ns.right);
    }, py::arg("loop"), "returns (left, middle, right) nucleus element lists");
    m.def("element_traits", [](const FiniteLoop& L, int x) {
        return json_to_py(element_traits(L, x).to_json());
    }, py::arg("loop"), py::arg("x"));
    m.def("is_aip_loop", &is_aip_loop, py::arg("loop"));
    m.def("is_weak_inverse_permutation", [](const FiniteLoop& L, const Permutation& a) {
        auto f = is_weak_inverse_permutation(L, a);
        return py::make_tuple(f.right, f.left);
    }, py::arg("loop"), py::arg("alpha"));
    m.def("weak_inverse_closure", &weak_inverse_closure, py::arg("loop"), py::arg("generators"));

    // isotopy ---------------------------------------------------------------
    py::class_<IsotopismTriple>(m, "IsotopismTriple")
        .def(py::init([](const Permutation& a, const Permutation& b, const Permutation& c) {
            return IsotopismTriple{a, b, c};
        }), py::arg("A"), py::arg("B"), py::arg("C"))
        .def_readonly("A", &IsotopismTriple::A)
        .def_readonly("B", &IsotopismTriple::B)
        .def_readonly("C", &IsotopismTriple::C)
        .def("to_dict", [](const IsotopismTriple& t) { return json_to_py(t.to_json()); })
        .def(py::self == py::self);

    py::class_<TConditionReport>(m, "TConditionReport")
        .def_readonly("t1", &TConditionReport::t1)
        .def_readonly("t21", &TConditionReport::t21)
        .def_readonly("t22", &TConditionReport::t22)
        .def_readonly("t31", &TConditionReport::t31)
        .def_readonly("t32", &TConditionReport::t32)
        .def_property_readonly("t2", &TConditionReport::t2)
        .def_property_readonly("t3", &TConditionReport::t3)
        .def_property_readonly("t", &TConditionReport::t)
        .def("to_dict", [](const TConditionReport& r) { return json_to_py(r.to_json()); });

    m.def("apply_isotopism", [](const FiniteLoop& L, const IsotopismTriple& t) {
        return quasigroup_or_loop(apply_isotopism(L, t));
    }, py::arg("loop"), py::arg("triple"));
    m.def("is_isotopism", &is_isotopism, py::arg("G"), py::arg("H"), py::arg("triple"));
    m.def("principal_isotope", &principal_isotope, py::arg("loop"), py::arg("f"), py::arg("g"));
    m.def("principal_triple", &principal_triple, py::arg("loop"), py::arg("f"), py::arg("g"));
    m.def("t_conditions", &t_conditions, py::arg("G"), py::arg("H"), py::arg("triple"));
    m.def("weak_t21", &weak_t21, py::arg("G"), py::arg("H"), py::arg("A"));
    m.def("find_t_witnesses", [](const FiniteLoop& L, bool allow_large) {
        py::list out;
        for (const auto& w : find_t_witnesses(L, allow_large))
            out.append(py::make_tuple(w.f, w.g, w.report));
        return out;
    }, py::arg("loop"), py::arg("allow_large") = false);
    m.def("is_autotopism", &is_autotopism, py::arg("loop"), py::arg("triple"));

    // isomorphy ---------------------------------------------------------------
    m.def("find_isomorphism", [](const FiniteLoop& G, const FiniteLoop& H) -> py::object {
        auto a = find_isomorphism(G, H);
        if (a) return py::cast(*a);
        return py::none();
    }, py::arg("G"), py::arg("H"));
    m.def("automorphisms", &automorphisms, py::arg("loop"));
    m.def("are_isotopic", [](const FiniteLoop& G, const FiniteLoop& H) -> py::object {
        auto t = are_isotopic(G, H);
        if (t) return py::cast(*t);
        return py::none();
    }, py::arg("G"), py::arg("H"));
    m.def("canonical_form", [](const FiniteLoop& L) {
        auto cf = canonical_form(L);
        return py::make_tuple(cf.loop, cf.relabeling);
    }, py::arg("loop"), "returns (canonical_loop, relabeling)");
    m.def("relabeled", &relabeled, py::arg("loop"), py::arg("sigma"));

    // enumeration -------------------------------------------------------------
    m.def("enumerate_loops", &enumerate_loops, py::arg("n"), py::arg("allow_large") = false);
    m.def("enumerate_up_to_isomorphism", &enumerate_up_to_isomorphism, py::arg("n"),
          py::arg("allow_large") = false);
    m.def("random_loop", &random_loop, py::arg("n"), py::arg("seed"));

    py::class_<LoopEnumerator>(m, "LoopEnumerator")
        .def(py::init<int, bool>(), py::arg("n"), py::arg("allow_large") = false)
        .def("next", [](LoopEnumerator& e) -> py::object {
            auto L = e.next();
            if (L) return py::cast(*L);
            return py::none();
        })
        .def("emitted", &LoopEnumerator::emitted)
        .def("exhausted", &LoopEnumerator::exhausted)
        .def("state", [](const LoopEnumerator& e) { return json_to_py(e.state()); })
        .def_static("resume", [](const py::dict& state) {
            return LoopEnumerator::resume(py_to_json(state));
        }, py::arg("state"));

    // theorem harness -----------------------------------------------------------
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("claim", &VerificationReport::claim)
        .def_property_readonly("status", [](const VerificationReport& r) { return to_string(r.status); })
        .def_readonly("instances_seen", &VerificationReport::instances_seen)
        .def_readonly("instances_checked", &VerificationReport::instances_checked)
        .def_readonly("vacuous_instances", &VerificationReport::vacuous_instances)
        .def_readonly("violations", &VerificationReport::violations)
        .def("to_dict", [](const VerificationReport& r) { return json_to_py(r.to_json()); })
        .def("to_table", &VerificationReport::to_table)
        .def("__repr__", [](const VerificationReport& r) {
            return "VerificationReport(" + r.claim + ": " + to_string(r.status) + ")";
        });

    m.def("registered_claims", [] {
        py::list out;
        for (const auto& c : registered_claims()) out.append(py::make_tuple(c.id, c.description));
        return out;
    });
    m.def("verify", [](const std::string& claim, int max_order, int threads) {
        ScanScope sc;
        sc.max_order = max_order;
        sc.threads = threads;
        return verify(claim, sc);
    }, py::arg("claim"), py::arg("max_order") = 5, py::arg("threads") = 1);
    m.def("find_counterexample", [](const std::string& claim, long budget, std::uint64_t seed) -> py::object {
        auto w = find_counterexample(claim, budget, seed);
        if (w) return json_to_py(*w);
        return py::none();
    }, py::arg("claim"), py::arg("budget"), py::arg("seed") = 0);
    m.def("recheck_witness", [](const std::string& claim, const py::dict& witness) {
        return recheck_witness(claim, py_to_json(witness));
    }, py::arg("claim"), py::arg("witness"));
}
