#include "pcy/problem.hpp"

#include <algorithm>
#include <set>

#include "pcy/errors.hpp"
#include "pcy/parse.hpp"

namespace pcy {

namespace {

struct Line {
    std::string text;   // comment-stripped, trimmed
    std::size_t offset; // byte offset of the line start in the input
};

std::vector<Line> split_lines(std::string_view bytes) {
    std::vector<Line> lines;
    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        std::size_t end = bytes.find('\n', pos);
        if (end == std::string_view::npos)
            end = bytes.size();
        std::string text(bytes.substr(pos, end - pos));
        std::size_t hash = text.find('#');
        if (hash != std::string::npos)
            text = text.substr(0, hash);
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        std::size_t b = 0, e = text.size();
        while (b < e && is_space(text[b]))
            ++b;
        while (e > b && is_space(text[e - 1]))
            --e;
        lines.push_back({text.substr(b, e - b), pos});
        if (end == bytes.size())
            break;
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string> split_list(const std::string& body, std::size_t offset) {
    // "[p; p; ...]"
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("expected a [p; p; ...] list", offset);
    std::vector<std::string> out;
    std::string inner = body.substr(1, body.size() - 2);
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = inner.find(';', pos);
        std::string item = inner.substr(pos, semi == std::string::npos
                                                 ? std::string::npos
                                                 : semi - pos);
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError("empty entry in polynomial list", offset);
        out.push_back(item.substr(b, e - b + 1));
        if (semi == std::string::npos)
            break;
        pos = semi + 1;
    }
    return out;
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t')
            ++pos;
        if (pos > start)
            out.push_back(text.substr(start, pos - start));
    }
    return out;
}

long parse_int(const std::string& text, std::size_t offset) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + text + "'", offset);
    }
}

} // namespace

ProblemFile parse_problem(std::string_view bytes) {
    ProblemFile out;
    bool saw_n = false, saw_d = false;
    std::set<std::string> names;
    std::vector<Line> lines = split_lines(bytes);

    std::size_t i = 0;
    auto keyval = [](const std::string& text) -> std::optional<std::pair<std::string, std::string>> {
        std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            return std::nullopt;
        std::string key = text.substr(0, eq);
        std::string val = text.substr(eq + 1);
        auto trim = [](std::string& s) {
            std::size_t b = s.find_first_not_of(" \t");
            std::size_t e = s.find_last_not_of(" \t");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(val);
        return std::make_pair(key, val);
    };

    while (i < lines.size()) {
        const Line& line = lines[i];
        if (line.text.empty()) {
            ++i;
            continue;
        }
        if (line.text.rfind("cycle ", 0) == 0) {
            std::string header = line.text.substr(6);
            if (header.empty() || header.back() != '{')
                throw ParseError("expected 'cycle <name> {'", line.offset);
            std::string name = header.substr(0, header.size() - 1);
            std::size_t b = name.find_first_not_of(" \t");
            std::size_t e = name.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError("cycle block needs a name", line.offset);
            name = name.substr(b, e - b + 1);
            if (!names.insert(name).second)
                throw ParseError("duplicate cycle name '" + name + "'",
                                 line.offset);
            RawCycle cycle{.name = name};
            RawSummand cur;
            bool have_any = false;
            ++i;
            for (;; ++i) {
                if (i >= lines.size())
                    throw ParseError("unterminated cycle block '" + name + "'",
                                     line.offset);
                if (lines[i].text.empty())
                    continue;
                if (lines[i].text == "}")
                    break;
                auto kv = keyval(lines[i].text);
                if (!kv)
                    throw ParseError("expected 'key = value' inside the cycle "
                                     "block", lines[i].offset);
                const auto& [key, val] = *kv;
                if (key == "coeff") {
                    if (have_any) {
                        if (cur.fs.empty() || cur.gs.empty())
                            throw ParseError("summand is missing its f or g "
                                             "list", lines[i].offset);
                        cycle.summands.push_back(std::move(cur));
                        cur = RawSummand{};
                    }
                    parse_int(val, lines[i].offset); // validates the literal
                    cur.coeff = val;
                    have_any = true;
                } else if (key == "f") {
                    if (!cur.fs.empty())
                        throw ParseError("duplicate f list in summand",
                                         lines[i].offset);
                    cur.fs = split_list(val, lines[i].offset);
                } else if (key == "g") {
                    if (!cur.gs.empty())
                        throw ParseError("duplicate g list in summand",
                                         lines[i].offset);
                    cur.gs = split_list(val, lines[i].offset);
                } else {
                    throw ParseError("unknown key '" + key + "' in cycle block",
                                     lines[i].offset);
                }
            }
            ++i; // consume '}'
            if (cur.coeff.empty())
                cur.coeff = "1";
            if (cur.fs.empty() || cur.gs.empty())
                throw ParseError("cycle block '" + name + "' is missing its "
                                 "f or g list", line.offset);
            cycle.summands.push_back(std::move(cur));
            for (const RawSummand& s : cycle.summands)
                if (s.fs.size() != s.gs.size())
                    throw ParseError("cycle '" + name + "': f and g lists have "
                                     "different lengths", line.offset);
            out.cycles.push_back(std::move(cycle));
            continue;
        }
        if (line.text.rfind("query ", 0) == 0) {
            std::vector<std::string> words = split_words(line.text.substr(6));
            if (words.empty())
                throw ParseError("empty query", line.offset);
            Query q{.command = words.front(),
                    .args = {words.begin() + 1, words.end()}};
            out.queries.push_back(std::move(q));
            ++i;
            continue;
        }
        auto kv = keyval(line.text);
        if (!kv)
            throw ParseError("expected 'key = value', a cycle block or a "
                             "query", line.offset);
        const auto& [key, val] = *kv;
        if (key == "n") {
            out.n = static_cast<int>(parse_int(val, line.offset));
            saw_n = true;
        } else if (key == "d") {
            out.d = static_cast<int>(parse_int(val, line.offset));
            saw_d = true;
        } else if (key == "root_order") {
            long v = parse_int(val, line.offset);
            if (v < 1)
                throw ParseError("root_order must be >= 1", line.offset);
            out.root_order = static_cast<unsigned long>(v);
        } else if (key == "F") {
            out.f_text = val;
        } else {
            throw ParseError("unknown key '" + key + "'", line.offset);
        }
        ++i;
    }
    if (!saw_n || !saw_d)
        throw ParseError("problem file must declare n and d", 0);
    return out;
}

std::string render_problem(const ProblemFile& p) {
    std::string out;
    out += "n = " + std::to_string(p.n) + "\n";
    out += "d = " + std::to_string(p.d) + "\n";
    out += "root_order = " + std::to_string(p.effective_root_order()) + "\n";
    RingPtr ring = PolyRing::get(p.n + 2, p.effective_root_order());
    auto squeeze = [](std::string s) {
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        return s;
    };
    if (p.f_text.has_value())
        out += "F = " + squeeze(parse_poly(*p.f_text, ring).str()) + "\n";
    for (const RawCycle& c : p.cycles) {
        out += "cycle " + c.name + " {\n";
        for (const RawSummand& s : c.summands) {
            out += "  coeff = " + (s.coeff.empty() ? "1" : s.coeff) + "\n";
            auto list = [&](const std::vector<std::string>& items) {
                std::string body = "[";
                for (std::size_t i = 0; i < items.size(); ++i) {
                    if (i)
                        body += "; ";
                    body += squeeze(parse_poly(items[i], ring).str());
                }
                return body + "]";
            };
            out += "  f = " + list(s.fs) + "\n";
            out += "  g = " + list(s.gs) + "\n";
        }
        out += "}\n";
    }
    for (const Query& q : p.queries) {
        out += "query " + q.command;
        for (const std::string& a : q.args)
            out += " " + a;
        out += "\n";
    }
    return out;
}

const CitCycle& ProblemInstance::cycle(const std::string& name) const {
    for (const auto& [n, c] : cycles)
        if (n == name)
            return c;
    throw DomainError("unknown cycle '" + name + "'");
}

ProblemInstance instantiate(const ProblemFile& p, bool verify_context) {
    if (p.n < 2 || p.n % 2 != 0)
        throw DomainError("n must be even and >= 2");
    if (p.d < 2)
        throw DomainError("d must be >= 2");
    RingPtr ring = PolyRing::get(p.n + 2, p.effective_root_order());
    Poly F(ring);
    if (p.f_text.has_value()) {
        F = parse_poly(*p.f_text, ring);
    } else {
        for (int i = 0; i < p.n + 2; ++i)
            F.add_term(Monomial::var(p.n + 2, i, p.d),
                       CycloScalar::one(ring->field()));
    }
    ProblemInstance inst{
        .ctx = HypersurfaceContext::make(p.n, p.d, std::move(F), verify_context),
        .cycles = {}};
    for (const RawCycle& rc : p.cycles) {
        CitCycle cycle;
        for (const RawSummand& rs : rc.summands) {
            CitSummand s;
            s.coeff = Integer(rs.coeff.empty() ? "1" : rs.coeff);
            for (const std::string& t : rs.fs)
                s.fs.push_back(parse_poly(t, ring));
            for (const std::string& t : rs.gs)
                s.gs.push_back(parse_poly(t, ring));
            cycle.summands.push_back(std::move(s));
        }
        inst.cycles.emplace_back(rc.name, std::move(cycle));
    }
    return inst;
}

} // namespace pcy
