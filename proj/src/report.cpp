#include "pcy/report.hpp"

#include <json.hpp>

namespace pcy {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json scalar_json(const CycloScalar& c) {
    ordered_json coords = ordered_json::array();
    for (const Rational& r : c.coords())
        coords.push_back(rational_str_canonical(r));
    return coords;
}

ordered_json period_json(const PeriodValue& v) {
    ordered_json out;
    out["tpi_power"] = v.tpi_power;
    out["inv_factorial"] = v.inv_factorial;
    out["inv_factorial_power"] = v.inv_factorial_power;
    out["algebraic_coords"] = scalar_json(v.algebraic);
    out["display"] = v.str();
    return out;
}

ordered_json header(const char* command) {
    ordered_json out;
    out["schema_version"] = 1;
    out["command"] = command;
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string scaled_label(const HypersurfaceContext& ctx) {
    return "c*(d-1)^" + std::to_string(ctx.n() + 2);
}

ordered_json basis_json(const RingPtr& ring, const SliceBasis& basis) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < basis.rows.size(); ++i)
        rows.push_back(basis.row_poly(ring, i).str());
    return rows;
}

} // namespace

std::string report_validate(const std::vector<NamedValidation>& results,
                            bool ci_check, const ReportOptions& opt) {
    bool all_ok = true;
    for (const auto& r : results)
        all_ok = all_ok && r.validation.ok();
    if (opt.format == Format::json) {
        ordered_json out = header("validate");
        out["ci_check"] = ci_check;
        ordered_json cycles = ordered_json::array();
        for (const auto& r : results) {
            ordered_json c;
            c["name"] = r.name;
            c["valid"] = r.validation.ok();
            ordered_json summands = ordered_json::array();
            for (const auto& s : r.validation.summands) {
                ordered_json sj;
                sj["ok"] = s.ok();
                if (!s.message.empty())
                    sj["message"] = s.message;
                if (!s.residual.is_zero())
                    sj["residual"] = s.residual.str();
                if (s.ci_ok.has_value())
                    sj["ci_ok"] = *s.ci_ok;
                summands.push_back(sj);
            }
            c["summands"] = summands;
            cycles.push_back(c);
        }
        out["cycles"] = cycles;
        out["ok"] = all_ok;
        return dump(out);
    }
    std::string out;
    for (const auto& r : results) {
        out += "cycle " + r.name + ": " +
               (r.validation.ok() ? "valid" : "INVALID") + "\n";
        for (std::size_t i = 0; i < r.validation.summands.size(); ++i) {
            const auto& s = r.validation.summands[i];
            if (!s.message.empty())
                out += "  summand " + std::to_string(i + 1) + ": " + s.message +
                       "\n";
            if (s.ci_ok.has_value() && *s.ci_ok)
                out += "  summand " + std::to_string(i + 1) +
                       ": complete-intersection certificate ok\n";
        }
    }
    out += std::string("result = ") + (all_ok ? "valid" : "invalid") + "\n";
    return out;
}

std::string report_class(const HypersurfaceContext& ctx, const std::string& name,
                         const CycleClassRepr& repr, const ReportOptions& opt) {
    if (opt.format == Format::json) {
        ordered_json out = header("class");
        out["cycle"] = name;
        out["theta_coeff"] = rational_str_canonical(repr.theta_coeff);
        out["theta_power"] = ctx.n() / 2;
        out["primitive_scale"] = rational_str_canonical(repr.primitive_scale);
        out["primitive_poly"] = repr.primitive_poly.str();
        out["primitive_poly_normal_form"] = repr.primitive_nf.str();
        out["is_theta_multiple"] = repr.is_theta_multiple();
        return dump(out);
    }
    std::string out;
    out += "cycle = " + name + "\n";
    out += "theta_coeff = " + rational_str(repr.theta_coeff) + "\n";
    out += "primitive_scale = " + rational_str(repr.primitive_scale) + "\n";
    out += "primitive_poly = " + repr.primitive_poly.str() + "\n";
    out += "primitive_poly mod J = " + repr.primitive_nf.str() + "\n";
    out += std::string("theta_multiple = ") +
           (repr.is_theta_multiple() ? "true" : "false") + "\n";
    return out;
}

std::string report_period(const HypersurfaceContext& ctx, const std::string& name,
                          const Poly& P, const PeriodValue& value,
                          const ReportOptions& opt) {
    // c (d-1)^{n+2} is the algebraic part; recover c for the audit line
    Rational scale(int_pow(Integer(ctx.d() - 1),
                           static_cast<unsigned long>(ctx.n() + 2)));
    CycloScalar c = value.algebraic * (Rational(1) / scale);
    if (opt.format == Format::json) {
        ordered_json out = header("period");
        out["cycle"] = name;
        out["poly"] = P.str();
        out["c_coords"] = scalar_json(c);
        out["period"] = period_json(value);
        return dump(out);
    }
    std::string out;
    out += "cycle = " + name + "\n";
    out += "poly = " + P.str() + "\n";
    out += "c = " + c.str() + "\n";
    out += scaled_label(ctx) + " = " + value.algebraic.str() + "\n";
    out += "period = " + value.str() + "\n";
    return out;
}

std::string report_intersect(const HypersurfaceContext& ctx,
                             const std::string& name_a, const std::string& name_b,
                             const Integer& deg_a, const Integer& deg_b,
                             const Rational& value, const ReportOptions& opt) {
    // value = deg_a deg_b / d - c (d-1)^{n+2} / d
    Rational c_scaled =
        Rational(deg_a * deg_b) - value * Rational(Integer(ctx.d()));
    c_scaled.canonicalize();
    Rational c = c_scaled / Rational(int_pow(Integer(ctx.d() - 1),
                                             static_cast<unsigned long>(ctx.n() + 2)));
    c.canonicalize();
    if (opt.format == Format::json) {
        ordered_json out = header("intersect");
        out["cycle_a"] = name_a;
        out["cycle_b"] = name_b;
        out["deg_a"] = rational_str_canonical(Rational(deg_a));
        out["deg_b"] = rational_str_canonical(Rational(deg_b));
        out["c"] = rational_str_canonical(c);
        out["c_scaled"] = rational_str_canonical(c_scaled);
        out["intersection"] = rational_str_canonical(value);
        return dump(out);
    }
    std::string out;
    out += "deg " + name_a + " = " + deg_a.get_str() + "\n";
    out += "deg " + name_b + " = " + deg_b.get_str() + "\n";
    out += "c = " + rational_str(c) + "\n";
    out += scaled_label(ctx) + " = " + rational_str(c_scaled) + "\n";
    out += "intersection = " + rational_str(value) + "\n";
    return out;
}

std::string report_tangent(const HypersurfaceContext& ctx,
                           const std::string& label, const TangentReport& rep,
                           const ReportOptions& opt) {
    bool include_basis =
        opt.emit_basis && rep.basis.dim() <= opt.basis_limit;
    if (opt.format == Format::json) {
        ordered_json out = header("tangent");
        out["cycle"] = label;
        out["degree"] = ctx.d();
        out["ambient_dim"] = rep.ambient_dim;
        out["tangent_dim"] = rep.tangent_dim;
        out["codim"] = rep.codim;
        if (opt.emit_basis) {
            if (include_basis)
                out["basis"] = basis_json(ctx.ring(), rep.basis);
            else
                out["basis_suppressed_above"] = opt.basis_limit;
        }
        return dump(out);
    }
    std::string out;
    out += "cycle = " + label + "\n";
    out += "ambient_dim = " + std::to_string(rep.ambient_dim) + "\n";
    out += "tangent_dim = " + std::to_string(rep.tangent_dim) + "\n";
    out += "codim = " + std::to_string(rep.codim) + "\n";
    if (opt.emit_basis) {
        if (include_basis) {
            for (std::size_t i = 0; i < rep.basis.rows.size(); ++i)
                out += "basis[" + std::to_string(i) + "] = " +
                       rep.basis.row_poly(ctx.ring(), i).str() + "\n";
        } else {
            out += "basis suppressed (dim above " +
                   std::to_string(opt.basis_limit) + ")\n";
        }
    }
    return out;
}

std::string report_colon_eq(const RingPtr& ring, const ColonEqualityReport& rep,
                            int e, const ReportOptions& opt) {
    if (opt.format == Format::json) {
        ordered_json out = header("colon-eq");
        out["degree"] = e;
        out["holds"] = rep.holds;
        out["lhs_dim"] = rep.lhs_dim;
        out["rhs_dim"] = rep.rhs_dim;
        if (rep.witness.has_value())
            out["witness"] = rep.witness->str();
        return dump(out);
    }
    std::string out;
    out += "degree = " + std::to_string(e) + "\n";
    out += std::string("holds = ") + (rep.holds ? "true" : "false") + "\n";
    out += "meet_dim = " + std::to_string(rep.lhs_dim) + "\n";
    out += "sum_colon_dim = " + std::to_string(rep.rhs_dim) + "\n";
    if (rep.witness.has_value())
        out += "witness = " + rep.witness->str() + "\n";
    return out;
}

std::string report_verdict(const FermatVerdict& v, const ReportOptions& opt) {
    if (opt.format == Format::json) {
        ordered_json out = header("fermat-verdict");
        out["n"] = v.n;
        out["d"] = v.d;
        out["m"] = v.m;
        out["a"] = v.a.get_str();
        out["b"] = v.b.get_str();
        out["ambient_dim"] = v.ambient;
        out["dim_tangent_1"] = v.dim_tangent_1;
        out["dim_tangent_2"] = v.dim_tangent_2;
        out["dim_meet"] = v.dim_meet;
        out["dim_delta_tangent"] = v.dim_delta_tangent;
        out["equal"] = v.equal;
        out["expected_equal"] = v.expected_equal;
        out["consistent"] = v.consistent;
        out["codim_formula"] = v.codim_formula_value.get_str();
        out["codim_match"] = v.codim_match;
        return dump(out);
    }
    std::string out;
    out += "n = " + std::to_string(v.n) + ", d = " + std::to_string(v.d) +
           ", m = " + std::to_string(v.m) + ", a = " + v.a.get_str() +
           ", b = " + v.b.get_str() + "\n";
    out += "ambient_dim = " + std::to_string(v.ambient) + "\n";
    out += "dim_meet = " + std::to_string(v.dim_meet) + "\n";
    out += "dim_delta_tangent = " + std::to_string(v.dim_delta_tangent) + "\n";
    out += std::string("equal = ") + (v.equal ? "true" : "false") +
           " expected = " + (v.expected_equal ? "true" : "false") +
           " consistent = " + (v.consistent ? "true" : "false") + "\n";
    out += "codim = " + v.codim_formula_value.get_str() +
           std::string(v.codim_match ? "" : " (MISMATCH with dim_meet)") + "\n";
    return out;
}

std::string report_hilbert(const HilbertProfile& profile, int n, int d,
                           const ReportOptions& opt) {
    if (opt.format == Format::json) {
        ordered_json out = header("hilbert");
        out["n"] = n;
        out["d"] = d;
        ordered_json dims = ordered_json::array();
        for (long v : profile.dims)
            dims.push_back(v);
        out["dims"] = dims;
        return dump(out);
    }
    std::string out;
    for (std::size_t i = 0; i < profile.dims.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(profile.dims[i]);
    }
    out += "\n";
    return out;
}

} // namespace pcy
