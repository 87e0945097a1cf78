#ifndef PCY_CONFIG_HPP
#define PCY_CONFIG_HPP

namespace pcy {

// Process-wide resource guardrails. Operations that would materialize a
// graded slice larger than slice_monomial_limit refuse with ResourceError;
// determinant expansion refuses above det_dim_limit.
struct Config {
    long slice_monomial_limit = 200000;
    int det_dim_limit = 12;
};

Config& config();

} // namespace pcy

#endif
