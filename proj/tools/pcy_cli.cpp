#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcy/errors.hpp"
#include "pcy/fermat.hpp"
#include "pcy/parse.hpp"
#include "pcy/problem.hpp"
#include "pcy/report.hpp"

namespace {

using namespace pcy;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ReportOptions make_options(const std::string& format, bool basis) {
    ReportOptions opt;
    if (format == "json")
        opt.format = Format::json;
    else if (format != "text")
        throw DomainError("unknown format '" + format + "'");
    opt.emit_basis = basis;
    return opt;
}

// Named positional arguments, or the file's matching `query` lines when
// none were given on the command line.
std::vector<std::vector<std::string>> resolve_args(
    const ProblemFile& file, const std::string& command,
    const std::vector<std::string>& cli_args, std::size_t expected) {
    if (!cli_args.empty()) {
        if (cli_args.size() != expected)
            throw DomainError(command + " expects " + std::to_string(expected) +
                              " argument(s)");
        return {cli_args};
    }
    std::vector<std::vector<std::string>> out;
    for (const Query& q : file.queries)
        if (q.command == command) {
            if (q.args.size() != expected)
                throw DomainError("query '" + command + "' expects " +
                                  std::to_string(expected) + " argument(s)");
            out.push_back(q.args);
        }
    if (out.empty())
        throw DomainError(command + ": no arguments given and no matching "
                          "query in the problem file");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact periods, cycle classes, intersection numbers and "
                 "Hodge-locus tangent spaces of complete-intersection "
                 "cycles in smooth projective hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow subcommand arguments
    app.failure_message(CLI::FailureMessage::simple);

    std::string format = "text";
    long max_dim = 0;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-dim", max_dim,
                   "monomial-space size guardrail (default 200000)");

    std::string file_path, cycle_a, cycle_b, poly_text;
    std::vector<std::string> positional;
    bool ci_check = false, emit_basis = false;

    auto* validate_cmd = app.add_subcommand("validate",
        "check cycle decompositions against F");
    validate_cmd->add_option("file", file_path)->required();
    validate_cmd->add_option("cycles", positional, "cycle names (default all)");
    validate_cmd->add_flag("--ci-check", ci_check,
        "also run the complete-intersection certificate");

    auto* class_cmd = app.add_subcommand("class",
        "cycle class in terms of the polarization and the primitive part");
    class_cmd->add_option("file", file_path)->required();
    class_cmd->add_option("args", positional, "cycle name");

    auto* period_cmd = app.add_subcommand("period",
        "period of a residue form against a cycle");
    period_cmd->add_option("file", file_path)->required();
    period_cmd->add_option("args", positional, "cycle name and polynomial");

    auto* intersect_cmd = app.add_subcommand("intersect",
        "intersection number of two cycles");
    intersect_cmd->add_option("file", file_path)->required();
    intersect_cmd->add_option("args", positional, "two cycle names");

    auto* tangent_cmd = app.add_subcommand("tangent",
        "Hodge-locus tangent space dimensions");
    tangent_cmd->add_option("file", file_path)->required();
    tangent_cmd->add_option("args", positional, "cycle name");
    tangent_cmd->add_option("--poly", poly_text,
        "associated polynomial given directly");
    tangent_cmd->add_flag("--basis", emit_basis, "emit the tangent basis");

    std::string r1_text, r2_text, gens_text;
    int colon_e = -1, gens_vars = 0;
    long gens_root = 0;
    auto* colon_cmd = app.add_subcommand("colon-eq",
        "compare (I:R1)_e meet (I:R2)_e with (I:R1+R2)_e");
    colon_cmd->add_option("file", file_path,
        "problem file; its Jacobian ideal is I");
    colon_cmd->add_option("--r1", r1_text)->required();
    colon_cmd->add_option("--r2", r2_text)->required();
    colon_cmd->add_option("--e", colon_e, "slice degree")->required();
    colon_cmd->add_option("--gens", gens_text,
        "explicit generators p;p;... instead of a file");
    colon_cmd->add_option("--vars", gens_vars, "variable count for --gens");
    colon_cmd->add_option("--root-order", gens_root,
        "cyclotomic root order for --gens (default 2)");

    int vn = 0, vd = 0, vm = -1;
    std::string alphas_text, a_text = "1", b_text = "1";
    auto* verdict_cmd = app.add_subcommand("fermat-verdict",
        "tangent-space comparison for a combination of two linear cycles");
    verdict_cmd->add_option("--n", vn)->required();
    verdict_cmd->add_option("--d", vd)->required();
    verdict_cmd->add_option("--m", vm)->required();
    verdict_cmd->add_option("--alphas", alphas_text,
        "second-cycle exponents, comma separated (default 3,3,...,1)");
    verdict_cmd->add_option("--a", a_text, "coefficient of the first cycle");
    verdict_cmd->add_option("--b", b_text, "coefficient of the second cycle");

    int hn = 0, hd = 0, he_max = -1;
    auto* hilbert_cmd = app.add_subcommand("hilbert",
        "Hilbert function of the Jacobian ring");
    hilbert_cmd->add_option("file", file_path, "problem file (else Fermat)");
    hilbert_cmd->add_option("--n", hn);
    hilbert_cmd->add_option("--d", hd);
    hilbert_cmd->add_option("--e-max", he_max, "default socle + 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems are parse errors
    }

    if (max_dim > 0)
        config().slice_monomial_limit = max_dim;
    ReportOptions opt = make_options(format, emit_basis);

    if (validate_cmd->parsed()) {
        ProblemFile pf = parse_problem(read_file(file_path));
        ProblemInstance inst = instantiate(pf);
        std::vector<NamedValidation> results;
        if (positional.empty()) {
            for (const auto& [name, cycle] : inst.cycles)
                results.push_back(
                    {name, validate_cycle(inst.ctx, cycle, ci_check)});
        } else {
            for (const std::string& name : positional)
                results.push_back(
                    {name, validate_cycle(inst.ctx, inst.cycle(name), ci_check)});
        }
        std::cout << report_validate(results, ci_check, opt);
        for (const auto& r : results)
            if (!r.validation.ok())
                return 2;
        return 0;
    }
    if (class_cmd->parsed()) {
        ProblemFile pf = parse_problem(read_file(file_path));
        ProblemInstance inst = instantiate(pf);
        for (const auto& args : resolve_args(pf, "class", positional, 1))
            std::cout << report_class(inst.ctx, args[0],
                                      cycle_class(inst.ctx, inst.cycle(args[0])),
                                      opt);
        return 0;
    }
    if (period_cmd->parsed()) {
        ProblemFile pf = parse_problem(read_file(file_path));
        ProblemInstance inst = instantiate(pf);
        for (const auto& args : resolve_args(pf, "period", positional, 2)) {
            Poly P = parse_poly(args[1], inst.ctx.ring());
            std::cout << report_period(
                inst.ctx, args[0], P,
                period(inst.ctx, inst.cycle(args[0]), P), opt);
        }
        return 0;
    }
    if (intersect_cmd->parsed()) {
        ProblemFile pf = parse_problem(read_file(file_path));
        ProblemInstance inst = instantiate(pf);
        for (const auto& args : resolve_args(pf, "intersect", positional, 2)) {
            const CitCycle& a = inst.cycle(args[0]);
            const CitCycle& b = inst.cycle(args[1]);
            std::cout << report_intersect(inst.ctx, args[0], args[1],
                                          cycle_degree(a), cycle_degree(b),
                                          intersection_number(inst.ctx, a, b),
                                          opt);
        }
        return 0;
    }
    if (tangent_cmd->parsed()) {
        ProblemFile pf = parse_problem(read_file(file_path));
        ProblemInstance inst = instantiate(pf);
        if (!poly_text.empty()) {
            Poly p = parse_poly(poly_text, inst.ctx.ring());
            std::cout << report_tangent(inst.ctx, poly_text,
                                        tangent(inst.ctx, p), opt);
            return 0;
        }
        for (const auto& args : resolve_args(pf, "tangent", positional, 1)) {
            Poly p = associated_polynomial(inst.ctx, inst.cycle(args[0]));
            std::cout << report_tangent(inst.ctx, args[0],
                                        tangent(inst.ctx, p), opt);
        }
        return 0;
    }
    if (colon_cmd->parsed()) {
        RingPtr ring;
        std::optional<GradedIdeal> ideal;
        if (!gens_text.empty()) {
            if (gens_vars < 2)
                throw DomainError("--gens needs --vars >= 2");
            ring = PolyRing::get(gens_vars,
                                 gens_root > 0 ? static_cast<unsigned long>(gens_root)
                                               : 2ul);
            std::vector<Poly> gens;
            std::size_t pos = 0;
            while (pos <= gens_text.size()) {
                std::size_t semi = gens_text.find(';', pos);
                std::string item = gens_text.substr(
                    pos, semi == std::string::npos ? std::string::npos
                                                   : semi - pos);
                gens.push_back(parse_poly(item, ring));
                if (semi == std::string::npos)
                    break;
                pos = semi + 1;
            }
            ideal.emplace(ring, std::move(gens));
        } else if (!file_path.empty()) {
            ProblemFile pf = parse_problem(read_file(file_path));
            ProblemInstance inst = instantiate(pf);
            ring = inst.ctx.ring();
            ideal.emplace(inst.ctx.jacobian_ideal());
        } else {
            throw DomainError("colon-eq needs a problem file or --gens");
        }
        Poly r1 = parse_poly(r1_text, ring);
        Poly r2 = parse_poly(r2_text, ring);
        std::cout << report_colon_eq(ring, colon_equality(*ideal, r1, r2, colon_e),
                                     colon_e, opt);
        return 0;
    }
    if (verdict_cmd->parsed()) {
        std::vector<int> alphas;
        if (!alphas_text.empty()) {
            std::size_t pos = 0;
            while (pos <= alphas_text.size()) {
                std::size_t comma = alphas_text.find(',', pos);
                std::string item = alphas_text.substr(
                    pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
                alphas.push_back(static_cast<int>(std::stol(item)));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
        } else {
            for (int j = 0; j <= vn / 2; ++j)
                alphas.push_back(j < vn / 2 - vm ? 3 : 1);
        }
        FermatVerdict v =
            fermat_verdict(vn, vd, vm, alphas, Integer(a_text), Integer(b_text));
        std::cout << report_verdict(v, opt);
        return 0;
    }
    if (hilbert_cmd->parsed()) {
        if (!file_path.empty()) {
            ProblemFile pf = parse_problem(read_file(file_path));
            ProblemInstance inst = instantiate(pf);
            int e_max = he_max >= 0 ? he_max : inst.ctx.socle() + 1;
            std::cout << report_hilbert(
                hilbert_function(inst.ctx.jacobian_ideal(), e_max),
                inst.ctx.n(), inst.ctx.d(), opt);
            return 0;
        }
        if (hn == 0 || hd == 0)
            throw DomainError("hilbert needs a problem file or --n and --d");
        HypersurfaceContext ctx = fermat_context(hn, hd);
        int e_max = he_max >= 0 ? he_max : ctx.socle() + 1;
        std::cout << report_hilbert(hilbert_function(ctx.jacobian_ideal(), e_max),
                                    ctx.n(), ctx.d(), opt);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
