#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcy/errors.hpp"
#include "pcy/fermat.hpp"
#include "pcy/hodge.hpp"
#include "pcy/parse.hpp"
#include "pcy/periods.hpp"

namespace py = pybind11;
using namespace pcy;

namespace {

py::object fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(r.get_num().get_str() + "/" + r.get_den().get_str());
}

py::object py_int(const Integer& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::list scalar_coords(const CycloScalar& c) {
    py::list out;
    for (const Rational& r : c.coords())
        out.append(fraction(r));
    return out;
}

CitCycle cycle_from_triples(
    const HypersurfaceContext& ctx,
    const std::vector<std::tuple<long, std::vector<std::string>,
                                 std::vector<std::string>>>& summands) {
    CitCycle cycle;
    for (const auto& [coeff, fs, gs] : summands) {
        CitSummand s{.coeff = Integer(coeff)};
        for (const std::string& t : fs)
            s.fs.push_back(parse_poly(t, ctx.ring()));
        for (const std::string& t : gs)
            s.gs.push_back(parse_poly(t, ctx.ring()));
        cycle.summands.push_back(std::move(s));
    }
    return cycle;
}

py::dict validation_dict(const CycleValidation& v) {
    py::dict out;
    out["valid"] = v.ok();
    py::list summands;
    for (const auto& s : v.summands) {
        py::dict sd;
        sd["ok"] = s.ok();
        if (!s.message.empty())
            sd["message"] = s.message;
        if (!s.residual.is_zero())
            sd["residual"] = s.residual.str();
        if (s.ci_ok.has_value())
            sd["ci_ok"] = *s.ci_ok;
        summands.append(sd);
    }
    out["summands"] = summands;
    return out;
}

py::dict tangent_dict(const TangentReport& rep) {
    py::dict out;
    out["ambient_dim"] = rep.ambient_dim;
    out["tangent_dim"] = rep.tangent_dim;
    out["codim"] = rep.codim;
    return out;
}

} // namespace

PYBIND11_MODULE(pcy, m) {
    m.doc() = "exact periods, cycle classes, intersection numbers and "
              "Hodge-locus tangent spaces of complete-intersection cycles "
              "in smooth projective hypersurfaces";

    py::register_exception<ParseError>(m, "PcyParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "PcyDomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "PcyResourceError",
                                          PyExc_RuntimeError);

    py::class_<Poly>(m, "Poly")
        .def("__str__", &Poly::str)
        .def("__repr__",
             [](const Poly& p) { return "Poly(" + p.str() + ")"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("degree", &Poly::degree)
        .def("is_zero", &Poly::is_zero)
        .def("is_homogeneous", &Poly::is_homogeneous)
        .def("partial", &Poly::partial, py::arg("var"));

    py::class_<PeriodValue>(m, "Period")
        .def_readonly("tpi_power", &PeriodValue::tpi_power)
        .def_readonly("inv_factorial", &PeriodValue::inv_factorial)
        .def_readonly("inv_factorial_power", &PeriodValue::inv_factorial_power)
        .def_property_readonly("algebraic",
                               [](const PeriodValue& v) {
                                   return scalar_coords(v.algebraic);
                               })
        .def("is_zero", &PeriodValue::is_zero)
        .def("__eq__", [](const PeriodValue& a,
                          const PeriodValue& b) { return a == b; })
        .def("__str__", &PeriodValue::str)
        .def("__repr__", &PeriodValue::str);

    py::class_<CitCycle>(m, "Cycle")
        .def_property_readonly("num_summands", [](const CitCycle& c) {
            return c.summands.size();
        });

    py::class_<HypersurfaceContext>(m, "Context")
        .def(py::init([](int n, int d, const std::string& f_text,
                         unsigned long root_order, bool verify) {
                 if (root_order == 0)
                     root_order = 2ul * static_cast<unsigned long>(d);
                 RingPtr ring = PolyRing::get(n + 2, root_order);
                 return HypersurfaceContext::make(
                     n, d, parse_poly(f_text, ring), verify);
             }),
             py::arg("n"), py::arg("d"), py::arg("F"),
             py::arg("root_order") = 0, py::arg("verify") = true)
        .def_property_readonly("n", &HypersurfaceContext::n)
        .def_property_readonly("d", &HypersurfaceContext::d)
        .def_property_readonly("sigma", &HypersurfaceContext::sigma)
        .def_property_readonly("socle", &HypersurfaceContext::socle)
        .def_property_readonly("F", &HypersurfaceContext::F)
        .def("parse", [](const HypersurfaceContext& ctx,
                         const std::string& text) {
            return parse_poly(text, ctx.ring());
        })
        .def("cycle",
             [](const HypersurfaceContext& ctx,
                const std::vector<std::tuple<long, std::vector<std::string>,
                                             std::vector<std::string>>>& s) {
                 return cycle_from_triples(ctx, s);
             },
             py::arg("summands"),
             "build an integer combination from (coeff, [f...], [g...]) "
             "triples of polynomial strings");

    m.def("fermat_context", &fermat_context, py::arg("n"), py::arg("d"));

    m.def("linear_cycle",
          [](int n, int d, const std::vector<int>& alphas) {
              return linear_cycle(LinearCycleSpec{n, d, alphas});
          },
          py::arg("n"), py::arg("d"), py::arg("alphas"));

    m.def("validate",
          [](const HypersurfaceContext& ctx, const CitCycle& cycle,
             bool ci_check) {
              return validation_dict(validate_cycle(ctx, cycle, ci_check));
          },
          py::arg("ctx"), py::arg("cycle"), py::arg("ci_check") = false);

    m.def("cycle_degree",
          [](const CitCycle& c) { return py_int(cycle_degree(c)); },
          py::arg("cycle"));

    m.def("associated_polynomial", &associated_polynomial, py::arg("ctx"),
          py::arg("cycle"));

    m.def("associated_poly_closed",
          [](int n, int d, const std::vector<int>& alphas) {
              return associated_poly_closed(LinearCycleSpec{n, d, alphas});
          },
          py::arg("n"), py::arg("d"), py::arg("alphas"));

    m.def("period", &period, py::arg("ctx"), py::arg("cycle"), py::arg("P"));

    m.def("linear_period_closed",
          [](int n, int d, const std::vector<int>& exponents) {
              return linear_period_closed(n, d, Monomial(exponents));
          },
          py::arg("n"), py::arg("d"), py::arg("exponents"));

    m.def("cycle_class",
          [](const HypersurfaceContext& ctx, const CitCycle& cycle) {
              CycleClassRepr repr = cycle_class(ctx, cycle);
              py::dict out;
              out["theta_coeff"] = fraction(repr.theta_coeff);
              out["theta_power"] = ctx.n() / 2;
              out["primitive_scale"] = fraction(repr.primitive_scale);
              out["primitive_poly"] = repr.primitive_poly;
              out["primitive_poly_normal_form"] = repr.primitive_nf;
              out["is_theta_multiple"] = repr.is_theta_multiple();
              return out;
          },
          py::arg("ctx"), py::arg("cycle"));

    m.def("cup", &cup_primitive, py::arg("ctx"), py::arg("P"), py::arg("Q"));

    m.def("intersection",
          [](const HypersurfaceContext& ctx, const CitCycle& a,
             const CitCycle& b) {
              Rational v = intersection_number(ctx, a, b);
              return py_int(v.get_num());
          },
          py::arg("ctx"), py::arg("a"), py::arg("b"));

    m.def("linear_intersection_closed",
          [](int n, int d, const std::vector<int>& a,
             const std::vector<int>& b) {
              Rational v = linear_intersection_closed(LinearCycleSpec{n, d, a},
                                                      LinearCycleSpec{n, d, b});
              return py_int(v.get_num());
          },
          py::arg("n"), py::arg("d"), py::arg("alphas_a"), py::arg("alphas_b"));

    m.def("top_form_period", &top_form_period, py::arg("f"), py::arg("Q"));

    m.def("tangent",
          [](const HypersurfaceContext& ctx, const Poly& p) {
              return tangent_dict(tangent(ctx, p));
          },
          py::arg("ctx"), py::arg("p_delta"));

    m.def("tangent_meet",
          [](const HypersurfaceContext& ctx, const Poly& p1, const Poly& p2) {
              return tangent_dict(tangent_meet(ctx, p1, p2));
          },
          py::arg("ctx"), py::arg("p1"), py::arg("p2"));

    m.def("colon_equality",
          [](const std::vector<Poly>& gens, const Poly& r1, const Poly& r2,
             int e) {
              if (gens.empty())
                  throw DomainError("need at least one generator");
              GradedIdeal I(gens.front().ring(), gens);
              ColonEqualityReport rep = colon_equality(I, r1, r2, e);
              py::dict out;
              out["holds"] = rep.holds;
              out["lhs_dim"] = rep.lhs_dim;
              out["rhs_dim"] = rep.rhs_dim;
              if (rep.witness.has_value())
                  out["witness"] = *rep.witness;
              return out;
          },
          py::arg("generators"), py::arg("r1"), py::arg("r2"), py::arg("e"));

    m.def("hilbert",
          [](const HypersurfaceContext& ctx, int e_max) {
              if (e_max < 0)
                  e_max = ctx.socle() + 1;
              return hilbert_function(ctx.jacobian_ideal(), e_max).dims;
          },
          py::arg("ctx"), py::arg("e_max") = -1);

    m.def("gorenstein_check",
          [](const HypersurfaceContext& ctx, int sigma) {
              if (sigma < 0)
                  sigma = ctx.socle();
              GorensteinReport rep =
                  gorenstein_check(ctx.jacobian_ideal(), sigma);
              py::dict out;
              out["ok"] = rep.ok();
              out["socle_dim_ok"] = rep.socle_dim_ok;
              out["vanishing_ok"] = rep.vanishing_ok;
              py::list ranks;
              for (const PairingRank& pr : rep.pairing_ranks) {
                  py::dict rd;
                  rd["split"] = pr.split;
                  rd["dim_low"] = pr.dim_low;
                  rd["dim_high"] = pr.dim_high;
                  rd["rank"] = pr.rank;
                  ranks.append(rd);
              }
              out["pairing_ranks"] = ranks;
              return out;
          },
          py::arg("ctx"), py::arg("sigma") = -1);

    m.def("codim_formula",
          [](int n, int d, int m_) { return py_int(codim_formula(n, d, m_)); },
          py::arg("n"), py::arg("d"), py::arg("m"));

    m.def("fermat_verdict",
          [](int n, int d, int m_, std::vector<int> alphas, long a, long b) {
              if (alphas.empty())
                  for (int j = 0; j <= n / 2; ++j)
                      alphas.push_back(j < n / 2 - m_ ? 3 : 1);
              FermatVerdict v =
                  fermat_verdict(n, d, m_, alphas, Integer(a), Integer(b));
              py::dict out;
              out["n"] = v.n;
              out["d"] = v.d;
              out["m"] = v.m;
              out["ambient_dim"] = v.ambient;
              out["dim_tangent_1"] = v.dim_tangent_1;
              out["dim_tangent_2"] = v.dim_tangent_2;
              out["dim_meet"] = v.dim_meet;
              out["dim_delta_tangent"] = v.dim_delta_tangent;
              out["equal"] = v.equal;
              out["expected_equal"] = v.expected_equal;
              out["consistent"] = v.consistent;
              out["codim_formula"] = py_int(v.codim_formula_value);
              out["codim_match"] = v.codim_match;
              return out;
          },
          py::arg("n"), py::arg("d"), py::arg("m"),
          py::arg("alphas") = std::vector<int>{}, py::arg("a") = 1,
          py::arg("b") = 1);
}
