#ifndef PCY_REPORT_HPP
#define PCY_REPORT_HPP

#include <string>
#include <vector>

#include "pcy/fermat.hpp"
#include "pcy/hodge.hpp"
#include "pcy/periods.hpp"

namespace pcy {

enum class Format { text, json };

// Deterministic, byte-stable reports. All numeric payload is exact:
// integers, rationals "num/den", cyclotomic coordinate vectors.
struct ReportOptions {
    Format format = Format::text;
    bool emit_basis = false;
    long basis_limit = 512; // suppress bases above this many rows
};

struct NamedValidation {
    std::string name;
    CycleValidation validation;
};

std::string report_validate(const std::vector<NamedValidation>& results,
                            bool ci_check, const ReportOptions& opt);

std::string report_class(const HypersurfaceContext& ctx, const std::string& name,
                         const CycleClassRepr& repr, const ReportOptions& opt);

std::string report_period(const HypersurfaceContext& ctx, const std::string& name,
                          const Poly& P, const PeriodValue& value,
                          const ReportOptions& opt);

std::string report_intersect(const HypersurfaceContext& ctx,
                             const std::string& name_a, const std::string& name_b,
                             const Integer& deg_a, const Integer& deg_b,
                             const Rational& value, const ReportOptions& opt);

std::string report_tangent(const HypersurfaceContext& ctx,
                           const std::string& label, const TangentReport& rep,
                           const ReportOptions& opt);

std::string report_colon_eq(const RingPtr& ring, const ColonEqualityReport& rep,
                            int e, const ReportOptions& opt);

std::string report_verdict(const FermatVerdict& v, const ReportOptions& opt);

std::string report_hilbert(const HilbertProfile& profile, int n, int d,
                           const ReportOptions& opt);

} // namespace pcy

#endif
