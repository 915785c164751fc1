#include "quadres/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadres/core_arith.hpp"
#include "quadres/diophantine.hpp"
#include "quadres/error.hpp"
#include "quadres/gaussian.hpp"
#include "quadres/oracle.hpp"
#include "quadres/quad_congruence.hpp"
#include "quadres/sqrt_mod.hpp"
#include "quadres/symbols.hpp"
#include "quadres/two_squares.hpp"

namespace quadres::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are JSON numbers; anything wider is a
// decimal string.
json to_json(const Int& v) {
    if (auto small = to_i64(v)) return *small;
    return v.str();
}

json to_json(const ResidueSet& s) {
    json residues = json::array();
    for (const Int& r : s.residues) residues.push_back(to_json(r));
    return {{"modulus", to_json(s.modulus)}, {"residues", std::move(residues)}};
}

json to_json(const std::vector<TwoSquareRep>& reps) {
    json arr = json::array();
    for (const auto& r : reps) arr.push_back({to_json(r.a), to_json(r.b)});
    return arr;
}

json to_json(const PythTriple& t) {
    return {{"s", to_json(t.s)}, {"t", to_json(t.t)}, {"r", to_json(t.r)}, {"m", to_json(t.m)}, {"n", to_json(t.n)}};
}

json to_json(const PythQuadruple& q) {
    return {{"x", to_json(q.x)}, {"y", to_json(q.y)}, {"z", to_json(q.z)}, {"w", to_json(q.w)},
            {"m", to_json(q.m)}, {"n", to_json(q.n)}, {"u", to_json(q.u)}, {"v", to_json(q.v)},
            {"primitive", q.primitive}};
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) s += ' ';
        s += parts[i];
    }
    return s;
}

/// A parsed command: its name and the echoed, already validated inputs.
struct Request {
    std::string command;
    json inputs = json::object();
};

struct Outcome {
    json result;
    std::vector<std::string> lines;  // plain-mode rendering
};

Outcome lines_of(const ResidueSet& s) {
    Outcome o{to_json(s), {}};
    for (const Int& r : s.residues) o.lines.push_back(r.str());
    return o;
}

Outcome lines_of(const std::vector<TwoSquareRep>& reps) {
    Outcome o{to_json(reps), {}};
    for (const auto& r : reps) o.lines.push_back(r.a.str() + " " + r.b.str());
    return o;
}

Outcome scalar(const Int& v) { return {to_json(v), {v.str()}}; }

Int arg_int(const json& inputs, const std::string& key) {
    const json& v = inputs.at(key);
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    return Int(v.get<std::string>());
}

GaussianInt arg_gaussian(const json& inputs, const std::string& key) {
    return *parse_gaussian(inputs.at(key).get<std::string>());
}

Int parse_or_throw(const std::string& text, const std::string& what) {
    auto v = parse_int(text);
    if (!v) throw UsageError(what + ": not an integer: '" + text + "'");
    return *v;
}

/// Builds the argument parser for every subcommand. After parse(), the
/// selected subcommand's callback has filled `request`.
class Parser {
public:
    Parser() : app_("Quadratic congruences, symbols, sums of two squares and Pythagorean tuples", "quadres") {
        app_.add_flag("--json", json_, "Emit one JSON envelope instead of plain lines");
        app_.require_subcommand(1);
        add_int_command("jacobi", "Jacobi symbol (A/N), N odd", {"A", "N"});
        add_legendre();
        add_int_command("sqrtmod", "All X with X^2 == A (mod N), gcd(A, N) = 1", {"A", "N"});
        add_solve_quadratic();
        add_mode_command("two-squares", "Sums of two squares", {"count", "list", "primitive", "represent-prime"});
        add_gaussian();
        add_int_command("pyth-triple", "Primitive triple from (M, N)", {"M", "N"});
        add_max_command("triples", "Primitive triples with hypotenuse <= R", "R");
        add_cz2();
        add_int_command("zl", "Primitive X^2 + Y^2 = Z^L from (A + iB)^L", {"L", "A", "B"});
        add_int_command("quadruple", "Quadruple from (M, N, U, V)", {"M", "N", "U", "V"});
        add_max_command("quadruples", "Primitive quadruples with W <= WMAX", "W");

        // Listed for --help only; run() splits "verify ..." off before parsing.
        auto* verify = app_.add_subcommand("verify", "Re-run a command through the brute-force oracles");
        verify->allow_extras();
        verify->callback([] { throw UsageError("verify needs a command to check"); });
    }

    void parse(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        app_.parse(args);
    }

    std::string help() const { return app_.help(); }
    bool json_mode() const { return json_; }
    Request& request() { return request_; }

private:
    CLI::App* add(const std::string& name, const std::string& help) {
        auto* sub = app_.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    }

    void add_int_command(const std::string& name, const std::string& help, std::vector<std::string> names) {
        auto* sub = add(name, help);
        auto* values = &positional_[name];
        sub->add_option("args", *values, join(names))->required()->expected(static_cast<int>(names.size()));
        sub->callback([this, name, names, values] {
            request_.command = name;
            for (std::size_t i = 0; i < names.size(); ++i)
                request_.inputs[names[i]] = to_json(parse_or_throw((*values)[i], names[i]));
        });
    }

    void add_legendre() {
        auto* sub = add("legendre", "Legendre symbol (A/P), P an odd prime");
        auto* values = &positional_["legendre"];
        sub->add_option("args", *values, "A P")->required()->expected(2);
        sub->add_option("--method", method_, "euler or gauss-lemma")
            ->check(CLI::IsMember({"euler", "gauss-lemma"}))
            ->default_val("euler");
        sub->callback([this, values] {
            request_.command = "legendre";
            request_.inputs["A"] = to_json(parse_or_throw((*values)[0], "A"));
            request_.inputs["P"] = to_json(parse_or_throw((*values)[1], "P"));
            request_.inputs["method"] = method_;
        });
    }

    void add_solve_quadratic() {
        auto* sub = add("solve-quadratic", "All X with A X^2 + B X + C == 0 (mod N)");
        auto* values = &positional_["solve-quadratic"];
        sub->add_option("args", *values, "A B C")->required()->expected(3);
        sub->add_option("--mod", modulus_, "modulus N")->required();
        sub->add_flag("--coprime", coprime_, "Use the gcd(2A, N) = 1 path");
        sub->callback([this, values] {
            request_.command = "solve-quadratic";
            request_.inputs["A"] = to_json(parse_or_throw((*values)[0], "A"));
            request_.inputs["B"] = to_json(parse_or_throw((*values)[1], "B"));
            request_.inputs["C"] = to_json(parse_or_throw((*values)[2], "C"));
            request_.inputs["N"] = to_json(parse_or_throw(modulus_, "N"));
            request_.inputs["coprime"] = coprime_;
        });
    }

    void add_mode_command(const std::string& name, const std::string& help, std::vector<std::string> modes) {
        auto* sub = add(name, help);
        auto* mode = &mode_[name];
        auto* values = &positional_[name];
        sub->add_option("mode", *mode, "one of: " + join(modes))->required()->check(CLI::IsMember(modes));
        sub->add_option("N", *values, "N")->required()->expected(1);
        sub->callback([this, name, mode, values] {
            request_.command = name;
            request_.inputs["mode"] = *mode;
            request_.inputs["N"] = to_json(parse_or_throw((*values)[0], "N"));
        });
    }

    void add_gaussian() {
        auto* sub = add("gaussian", "Gaussian integers, written a+bi");
        auto* mode = &mode_["gaussian"];
        auto* values = &positional_["gaussian"];
        sub->add_option("mode", *mode, "norm, divrem, gcd, factor or is-prime")
            ->required()
            ->check(CLI::IsMember({"norm", "divrem", "gcd", "factor", "is-prime"}));
        sub->add_option("args", *values, "Gaussian integers")->required();
        sub->callback([this, mode, values] {
            request_.command = "gaussian";
            request_.inputs["mode"] = *mode;
            const std::size_t want = (*mode == "divrem" || *mode == "gcd") ? 2 : 1;
            if (values->size() != want)
                throw UsageError("gaussian " + *mode + " takes " + std::to_string(want) + " argument(s)");
            static const char* names[] = {"alpha", "beta"};
            for (std::size_t i = 0; i < want; ++i) {
                auto z = parse_gaussian((*values)[i]);
                if (!z) throw UsageError("not a Gaussian integer: '" + (*values)[i] + "'");
                request_.inputs[names[i]] = to_string(*z);
            }
        });
    }

    void add_max_command(const std::string& name, const std::string& help, const std::string& key) {
        auto* sub = add(name, help);
        auto* value = &named_[name];
        sub->add_option("--max", *value, key)->required();
        sub->callback([this, name, key, value] {
            request_.command = name;
            request_.inputs[key] = to_json(parse_or_throw(*value, key));
        });
    }

    void add_cz2() {
        auto* sub = add("cz2", "Primitive X^2 + Y^2 = C Z^2 solution");
        sub->add_option("--c", cz2_.c, "C")->required();
        sub->add_option("--d3", cz2_.d3, "D3")->default_val("1");
        sub->add_option("--uv", cz2_.uv, "U V")->required()->expected(2);
        sub->add_option("--g", cz2_.g, "G in {0, 1}")->default_val("0");
        sub->add_option("--triple", cz2_.triple, "M N generating the triple")->required()->expected(2);
        sub->callback([this] {
            request_.command = "cz2";
            request_.inputs["C"] = to_json(parse_or_throw(cz2_.c, "C"));
            request_.inputs["D3"] = to_json(parse_or_throw(cz2_.d3, "D3"));
            request_.inputs["U"] = to_json(parse_or_throw(cz2_.uv[0], "U"));
            request_.inputs["V"] = to_json(parse_or_throw(cz2_.uv[1], "V"));
            request_.inputs["G"] = to_json(parse_or_throw(cz2_.g, "G"));
            request_.inputs["M"] = to_json(parse_or_throw(cz2_.triple[0], "M"));
            request_.inputs["N"] = to_json(parse_or_throw(cz2_.triple[1], "N"));
        });
    }

    CLI::App app_;
    bool json_ = false;
    Request request_;
    std::map<std::string, std::vector<std::string>> positional_;
    std::map<std::string, std::string> mode_;
    std::map<std::string, std::string> named_;
    std::string method_ = "euler";
    std::string modulus_;
    bool coprime_ = false;
    struct {
        std::string c, d3, g;
        std::vector<std::string> uv, triple;
    } cz2_;
};

unsigned small_unsigned(const Int& v, const std::string& what) {
    if (v < 0 || v > 1'000'000) throw MathError(Errc::invalid_argument, what + " out of range");
    return v.convert_to<unsigned>();
}

Outcome execute(const Request& req) {
    const json& in = req.inputs;
    const std::string& cmd = req.command;

    if (cmd == "jacobi") return scalar(to_int(jacobi(arg_int(in, "A"), arg_int(in, "N"))));
    if (cmd == "legendre") {
        const Int a = arg_int(in, "A"), p = arg_int(in, "P");
        const Symbol s = in.at("method") == "gauss-lemma" ? legendre_gauss_lemma(a, p) : legendre_euler(a, p);
        return scalar(to_int(s));
    }
    if (cmd == "sqrtmod") return lines_of(sqrt_mod(arg_int(in, "A"), arg_int(in, "N")));
    if (cmd == "solve-quadratic") {
        const QuadCongruence q(arg_int(in, "A"), arg_int(in, "B"), arg_int(in, "C"), arg_int(in, "N"));
        return lines_of(in.at("coprime").get<bool>() ? solve_quadratic_coprime(q) : solve_quadratic(q));
    }
    if (cmd == "two-squares") {
        const std::string mode = in.at("mode");
        const Int n = arg_int(in, "N");
        if (mode == "count") return scalar(count_representations(n));
        if (mode == "list") return lines_of(all_representations(n));
        if (mode == "primitive") return lines_of(primitive_representations(n));
        const TwoSquareRep r = represent_prime(n);
        return {json::array({to_json(r.a), to_json(r.b)}), {r.a.str() + " " + r.b.str()}};
    }
    if (cmd == "gaussian") {
        const std::string mode = in.at("mode");
        const GaussianInt alpha = arg_gaussian(in, "alpha");
        if (mode == "norm") return scalar(norm(alpha));
        if (mode == "is-prime") {
            const bool p = is_gaussian_prime(alpha);
            return {p, {p ? "true" : "false"}};
        }
        if (mode == "factor") {
            const GaussianFactorization f = factor(alpha);
            Outcome o;
            json factors = json::array();
            o.lines.push_back("unit " + to_string(f.unit));
            for (const auto& [p, e] : f.factors) {
                factors.push_back({{"prime", to_string(p)}, {"exponent", e}});
                o.lines.push_back(to_string(p) + " " + std::to_string(e));
            }
            o.result = {{"unit", to_string(f.unit)}, {"factors", std::move(factors)}};
            return o;
        }
        const GaussianInt beta = arg_gaussian(in, "beta");
        if (mode == "gcd") {
            const GaussianInt g = gcd(alpha, beta);
            return {to_string(g), {to_string(g)}};
        }
        const GaussianDivRem dr = div_rem(alpha, beta);
        return {{{"quotient", to_string(dr.quotient)}, {"remainder", to_string(dr.remainder)}},
                {to_string(dr.quotient), to_string(dr.remainder)}};
    }
    if (cmd == "pyth-triple") {
        const PythTriple t = pyth_triple(arg_int(in, "M"), arg_int(in, "N"));
        return {to_json(t), {t.s.str() + " " + t.t.str() + " " + t.r.str()}};
    }
    if (cmd == "triples") {
        Outcome o{json::array(), {}};
        for (const auto& t : enumerate_primitive_triples(arg_int(in, "R"))) {
            o.result.push_back(to_json(t));
            o.lines.push_back(t.s.str() + " " + t.t.str() + " " + t.r.str());
        }
        return o;
    }
    if (cmd == "cz2") {
        const PythTriple t = pyth_triple(arg_int(in, "M"), arg_int(in, "N"));
        const CZ2Solution s = cz2_solution(arg_int(in, "C"), arg_int(in, "D3"), arg_int(in, "U"), arg_int(in, "V"),
                                           small_unsigned(arg_int(in, "G"), "G"), t);
        return {{{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"z", to_json(s.z)}, {"c", to_json(s.c)},
                 {"d3", to_json(s.d3)}, {"g", s.g}, {"u", to_json(s.u)}, {"v", to_json(s.v)},
                 {"primitive", s.primitive}},
                {s.x.str() + " " + s.y.str() + " " + s.z.str() + (s.primitive ? "" : " non-primitive")}};
    }
    if (cmd == "zl") {
        const ZlSolution s = zl_solution(small_unsigned(arg_int(in, "L"), "L"), arg_int(in, "A"), arg_int(in, "B"));
        return {{{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"z", to_json(s.z)}, {"l", s.l},
                 {"a", to_json(s.a)}, {"b", to_json(s.b)}},
                {s.x.str() + " " + s.y.str() + " " + s.z.str()}};
    }
    if (cmd == "quadruple") {
        const PythQuadruple q = pyth_quadruple(arg_int(in, "M"), arg_int(in, "N"), arg_int(in, "U"), arg_int(in, "V"));
        return {to_json(q), {q.x.str() + " " + q.y.str() + " " + q.z.str() + " " + q.w.str() +
                             (q.primitive ? "" : " non-primitive")}};
    }
    if (cmd == "quadruples") {
        Outcome o{json::array(), {}};
        for (const auto& q : enumerate_quadruples(arg_int(in, "W"))) {
            o.result.push_back(to_json(q));
            o.lines.push_back(q.x.str() + " " + q.y.str() + " " + q.z.str() + " " + q.w.str());
        }
        return o;
    }
    throw UsageError("unknown command " + cmd);
}

/// The same request answered by the brute-force oracles, or nullopt when
/// no oracle covers it.
std::optional<json> execute_oracle(const Request& req) {
    const json& in = req.inputs;
    const std::string& cmd = req.command;
    if (cmd == "jacobi") return to_int(oracle::brute_jacobi(arg_int(in, "A"), arg_int(in, "N")));
    if (cmd == "legendre") return to_int(oracle::brute_legendre(arg_int(in, "A"), arg_int(in, "P")));
    if (cmd == "sqrtmod") return to_json(oracle::brute_sqrt_mod(arg_int(in, "A"), arg_int(in, "N")));
    if (cmd == "solve-quadratic")
        return to_json(oracle::brute_quadratic(arg_int(in, "A"), arg_int(in, "B"), arg_int(in, "C"), arg_int(in, "N")));
    if (cmd == "two-squares") {
        const std::string mode = in.at("mode");
        const Int n = arg_int(in, "N");
        const auto reps = oracle::brute_two_squares(n);
        if (mode == "count") return to_json(Int(n == 0 ? 1 : reps.size()));
        if (mode == "list") return to_json(reps);
        if (mode == "primitive") {
            std::vector<TwoSquareRep> positive;
            for (const auto& r : reps)
                if (r.primitive && r.a > 0 && (r.b > 0 || n == 1)) positive.push_back(r);
            return to_json(positive);
        }
    }
    return std::nullopt;
}

json envelope(const Request& req, const std::string& command) {
    return {{"command", command}, {"inputs", req.inputs}, {"status", "ok"}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    // "verify" wraps a whole inner command line, so it is split off by hand:
    // global flags first, then the verify token, then the inner command.
    std::vector<std::string> outer = args;
    std::optional<std::vector<std::string>> inner_args;
    const auto first_word = std::find_if(args.begin(), args.end(), [](const std::string& a) {
        return a.empty() || a.front() != '-';
    });
    if (first_word != args.end() && *first_word == "verify" && first_word + 1 != args.end()) {
        outer.assign(args.begin(), first_word);
        inner_args.emplace(first_word + 1, args.end());
    }

    Parser parser;
    Request req;
    bool json_mode = false;
    try {
        if (inner_args) {
            // Only global flags may precede verify.
            for (const auto& flag : outer)
                if (flag != "--json") throw UsageError("unexpected argument before verify: " + flag);
            json_mode = !outer.empty();
            parser.parse(*inner_args);
            if (parser.request().command == "verify") throw UsageError("verify cannot be nested");
        } else {
            parser.parse(outer);
        }
        req = parser.request();
        json_mode = json_mode || parser.json_mode();
    } catch (const CLI::CallForHelp&) {
        out << parser.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    const bool verifying = inner_args.has_value();

    const std::string command = verifying ? "verify " + req.command : req.command;
    json env = envelope(req, command);
    try {
        Outcome outcome = execute(req);
        int code = kExitOk;
        if (verifying) {
            const std::optional<json> reference = execute_oracle(req);
            if (!reference) {
                err << "usage error: no oracle covers '" << req.command << "'\n";
                return kExitUsage;
            }
            const bool agree = *reference == outcome.result;
            outcome.result = {{"agree", agree}, {"library", outcome.result}, {"oracle", *reference}};
            outcome.lines = {agree ? "agree" : "disagree"};
            if (!agree) code = kExitDomainError;
        }
        if (json_mode) {
            env["result"] = std::move(outcome.result);
            out << env.dump() << "\n";
        } else {
            for (const auto& line : outcome.lines) out << line << "\n";
        }
        return code;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        if (json_mode) {
            env["status"] = "error";
            env["error"] = e.what();
            env["result"] = nullptr;
            out << env.dump() << "\n";
        }
        return kExitDomainError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace quadres::cli
