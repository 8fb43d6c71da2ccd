#include "qslab/enumerate.hpp"
#include "qslab/qexpr.hpp"
#include "qslab/qproducts.hpp"
#include "qslab/series.hpp"
#include "qslab/theorems.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

// mpz -> arbitrary-precision python int, via decimal string
py::object to_pyint(const qslab::Integer& x) {
    return py::int_(py::str(x.get_str()));
}

py::list coeff_list(const qslab::Series& s) {
    py::list out;
    for (long n = 0; n <= s.order(); ++n) out.append(to_pyint(s.coeff(n)));
    return out;
}

py::dict report_dict(const qslab::VerificationReport& r) {
    py::dict d;
    d["check_id"] = r.check_id;
    d["verdict"] = qslab::to_string(r.verdict);
    d["order_checked"] = r.order_checked;
    d["range"] = py::make_tuple(r.range_lo, r.range_hi);
    if (r.first_failure) {
        py::dict f;
        f["index"] = r.first_failure->index;
        f["expected"] = r.first_failure->expected;
        f["actual"] = r.first_failure->actual;
        d["first_failure"] = f;
    } else {
        d["first_failure"] = py::none();
    }
    d["runtime_ms"] = r.runtime_ms;
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qslab, m) {
    m.doc() = "exact q-series engine: named generating functions, a brute-force "
              "partition oracle, an expression evaluator and the verification suite";

    m.def("series_names", [] { return qslab::registry_names(); });
    m.def(
        "expand",
        [](const std::string& target, long order) {
            if (qslab::registry_has(target)) return coeff_list(qslab::registry_eval(target, order));
            return coeff_list(qslab::qexpr::eval_text(target, order));
        },
        py::arg("target"), py::arg("order"),
        "coefficients 0..order of a named series or q-expression");
    m.def(
        "series_expression",
        [](const std::string& name) { return qslab::registry_expression(name); },
        py::arg("name"), "expression-language text form of a named series");
    m.def(
        "oracle_count",
        [](const std::string& constraint, long n) {
            return qslab::count(n, qslab::PartitionConstraint::parse(constraint));
        },
        py::arg("constraint"), py::arg("n"),
        "number of partitions of n satisfying the constraint, by enumeration");
    m.def(
        "partitions",
        [](const std::string& constraint, long n) {
            auto c = qslab::PartitionConstraint::parse(constraint);
            py::list out;
            qslab::for_each_partition(n, [&](const qslab::Partition& p) {
                if (c.matches(p)) out.append(p);
                return true;
            });
            return out;
        },
        py::arg("constraint"), py::arg("n"), "the qualifying partitions themselves");
    m.def(
        "check_identity",
        [](const std::string& lhs, const std::string& rhs, long order) {
            return report_dict(qslab::qexpr::check_identity(lhs, rhs, order));
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("order") = 100);
    m.def(
        "verify",
        [](const std::string& check_id, long order, long k_max, long oracle_limit) {
            py::list out;
            for (const auto& r : qslab::run_check(check_id, order, k_max, oracle_limit))
                out.append(report_dict(r));
            return out;
        },
        py::arg("check_id") = "all", py::arg("order") = 200, py::arg("k_max") = 4,
        py::arg("oracle_limit") = 40);
    m.def("check_ids", [] { return qslab::check_ids(); });
}
