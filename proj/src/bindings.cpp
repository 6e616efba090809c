#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsig/analysis.hpp"
#include "fsig/errors.hpp"
#include "fsig/input.hpp"
#include "fsig/suites.hpp"

namespace py = pybind11;
using namespace fsig;

namespace {

std::pair<VarietySpec, TDivisor> resolve(const std::string& variety, const std::string& spec) {
    VarietySpec v = resolve_variety(variety);
    TDivisor d = parse_spec(v, spec);
    return {std::move(v), std::move(d)};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact F-signature computations on toric varieties";

    m.def("varieties", [] { return builtin_names(); });

    m.def("class_dictionary", [](const std::string& variety) {
        return builtin(variety).class_names;
    });

    m.def(
        "fsignature",
        [](const std::string& variety, const std::string& divisor) {
            auto [v, d] = resolve(variety, divisor);
            return to_string(fsignature(v.fan, d));
        },
        py::arg("variety"), py::arg("divisor"));

    m.def(
        "volume",
        [](const std::string& variety, const std::string& divisor) {
            auto [v, d] = resolve(variety, divisor);
            return to_string(volume_of_divisor(v.fan, d));
        },
        py::arg("variety"), py::arg("divisor"));

    m.def(
        "is_ample",
        [](const std::string& variety, const std::string& divisor) {
            auto [v, d] = resolve(variety, divisor);
            return is_ample(v.fan, d);
        },
        py::arg("variety"), py::arg("divisor"));

    m.def(
        "is_nef",
        [](const std::string& variety, const std::string& divisor) {
            auto [v, d] = resolve(variety, divisor);
            return is_nef(v.fan, d);
        },
        py::arg("variety"), py::arg("divisor"));

    m.def(
        "free_rank",
        [](const std::string& variety, const std::string& divisor, long p, int e) {
            auto [v, d] = resolve(variety, divisor);
            auto r = free_rank(v.fan, d, Int(p), e);
            py::dict out;
            out["p"] = p;
            out["e"] = r.e;
            out["a_e"] = r.a_e.get_str();
            out["normalized"] = to_string(r.normalized);
            return out;
        },
        py::arg("variety"), py::arg("divisor"), py::arg("p"), py::arg("e"));

    m.def(
        "splitting_dimensions",
        [](const std::string& variety, const std::string& divisor, long p, int e) {
            auto [v, d] = resolve(variety, divisor);
            std::map<long, std::string> out;
            for (const auto& [deg, dim] : splitting_dimensions(v.fan, d, Int(p), e))
                out[deg] = dim.get_str();
            return out;
        },
        py::arg("variety"), py::arg("divisor"), py::arg("p"), py::arg("e"));

    m.def(
        "max_splitting_degree",
        [](const std::string& variety, const std::string& divisor, long p, int e) {
            auto [v, d] = resolve(variety, divisor);
            return max_splitting_degree(v.fan, d, Int(p), e);
        },
        py::arg("variety"), py::arg("divisor"), py::arg("p"), py::arg("e"));

    m.def(
        "vanishing_degree_oracle",
        [](const std::string& variety, const std::string& divisor, long p, int e) {
            auto [v, d] = resolve(variety, divisor);
            return vanishing_degree_oracle(v.fan, d, Int(p), e);
        },
        py::arg("variety"), py::arg("divisor"), py::arg("p"), py::arg("e"));

    m.def(
        "closed_form_p1p1",
        [](const std::string& a, const std::string& b) {
            return to_string(closed_form_p1p1(parse_rational(a), parse_rational(b)));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "closed_form_blp2",
        [](const std::string& a, const std::string& b) {
            return to_string(closed_form_blp2(parse_rational(a), parse_rational(b)));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "boundary_limit",
        [](const std::string& variety, const std::string& target, const std::string& direction,
           int schedule) {
            VarietySpec v = resolve_variety(variety);
            TDivisor d0 = parse_spec(v, target);
            TDivisor a = parse_spec(v, direction);
            return to_string(boundary_limit(v.fan, d0, a, schedule));
        },
        py::arg("variety"), py::arg("target"), py::arg("direction"), py::arg("schedule") = 8);

    m.def("suite_names", [] { return suite_names(); });

    m.def(
        "check",
        [](const std::string& suite, long p, int e) {
            return reports_to_json(run_suites(suite, Int(p), e));
        },
        py::arg("suite"), py::arg("p") = 0, py::arg("e") = 0);
}
