#ifndef PCY_PROBLEM_HPP
#define PCY_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcy/periods.hpp"

namespace pcy {

// Raw problem-file content. Line-oriented `key = value` header, then named
// cycle blocks and query lines:
//
//   # comment
//   n = 2
//   d = 3
//   root_order = 6            (optional, defaults to 2d)
//   F = x0^3+x1^3+x2^3+x3^3   (optional, defaults to the Fermat form)
//   cycle line {
//     coeff = 1
//     f = [x0+x1; x2+x3]
//     g = [x0^2-x0*x1+x1^2; x2^2-x2*x3+x3^2]
//   }
//   query intersect line line
//
// A block may repeat coeff/f/g groups to build an integer combination.
struct RawSummand {
    std::string coeff;
    std::vector<std::string> fs;
    std::vector<std::string> gs;
};

struct RawCycle {
    std::string name;
    std::vector<RawSummand> summands;
};

struct Query {
    std::string command;
    std::vector<std::string> args;
};

struct ProblemFile {
    int n = 0;
    int d = 0;
    unsigned long root_order = 0; // 0: default 2d
    std::optional<std::string> f_text;
    std::vector<RawCycle> cycles;
    std::vector<Query> queries;

    unsigned long effective_root_order() const {
        return root_order != 0 ? root_order
                               : 2ul * static_cast<unsigned long>(d);
    }
};

ProblemFile parse_problem(std::string_view bytes);

// Canonical text form; parse_problem(render_problem(p)) instantiates to
// the same data.
std::string render_problem(const ProblemFile& p);

// The semantic content of a problem file: the hypersurface context plus
// the named cycles, all polynomials parsed in the declared ring.
struct ProblemInstance {
    HypersurfaceContext ctx;
    std::vector<std::pair<std::string, CitCycle>> cycles;

    const CitCycle& cycle(const std::string& name) const;
};

// verify_context runs the Gorenstein smoothness checks on J^F.
ProblemInstance instantiate(const ProblemFile& p, bool verify_context = true);

} // namespace pcy

#endif
