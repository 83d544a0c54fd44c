// Command-line front end: AIR matrix construction, rate bounds, member-pair
// enumeration, codebook export, decodability verification and round-trip
// simulation, plus the tiny-instance brute-force oracle.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "suicp/suicp.hpp"

using nlohmann::json;
using namespace suicp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParamError = 2;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::string block_label(const FillStep& step) {
    std::string unit = "I_" + std::to_string(step.ident);
    std::string sep = step.row_block ? ";" : "|";
    std::string out = unit;
    for (std::size_t i = 1; i < step.copies; ++i) out += sep + unit;
    return out;
}

void print_matrix(std::ostream& os, const ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << unsigned(m.at(r, c));
        }
        os << '\n';
    }
}

json matrix_json(const ExactMatrix& m) {
    json data = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int(m.at(r, c)));
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json rational_json(const Rational& r) {
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}

std::string coord_label(char sym, std::size_t k, std::size_t coord0) {
    // coordinates are displayed 1-based
    return std::string(1, sym) + "[" + std::to_string(k) + "," +
           std::to_string(coord0 + 1) + "]";
}

std::string combo_label(const std::vector<std::uint8_t>& combo, unsigned p) {
    std::string out;
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (combo[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (combo[i] != 1 && p > 2) out += std::to_string(unsigned(combo[i])) + "*";
        out += "c[" + std::to_string(i) + "]";
    }
    return out.empty() ? "0" : out;
}

struct PairOpt {
    bool set = false;
    long long a = 0;
    long long b = 1;
};

void add_pair_option(CLI::App* cmd, PairOpt& pair) {
    cmd->add_option_function<std::string>(
        "--pair",
        [&pair](const std::string& text) {
            std::size_t comma = text.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--pair expects a,b");
            pair.a = std::stoll(text.substr(0, comma));
            pair.b = std::stoll(text.substr(comma + 1));
            pair.set = true;
        },
        "override the (a,b) pair, e.g. 2,3");
}

int cmd_air(std::size_t g, std::size_t h, const std::string& format,
            const std::string& out_path) {
    AirMatrix air = build_air(g, h);
    LambdaChain chain = lambda_chain(g, h);
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "json") {
        json j = matrix_json(air.matrix);
        json trace = json::array();
        for (const FillStep& s : air.trace)
            trace.push_back(json{{"block", block_label(s)},
                                 {"orientation", s.row_block ? "row" : "column"},
                                 {"copies", s.copies},
                                 {"ident", s.ident},
                                 {"row", s.row_off},
                                 {"col", s.col_off}});
        j["trace"] = std::move(trace);
        j["lambdas"] = chain.lambdas;
        j["betas"] = chain.betas;
        os << j.dump(2) << '\n';
    } else {
        print_matrix(os, air.matrix);
        os << "lambda:";
        for (std::size_t i = 0; i < chain.lambdas.size(); ++i)
            os << " l" << (static_cast<long long>(i) - 1) << "=" << chain.lambdas[i];
        os << "\nbeta:";
        for (std::size_t i = 0; i < chain.betas.size(); ++i)
            os << " b" << i << "=" << chain.betas[i];
        os << '\n';
    }
    return kExitOk;
}

int cmd_bounds(const std::string& literal, const std::string& format,
               const std::string& out_path) {
    SciInstance inst = parse_instance(literal);
    RateBound bounds = compute_bounds(inst);
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "json") {
        json j{{"instance", format_instance(inst)},
               {"lower", rational_json(bounds.lower)},
               {"upper", rational_json(bounds.upper)},
               {"a_min", bounds.opt.a_min},
               {"b_min", bounds.opt.b_min},
               {"gap_bound", rational_json(bounds.gap)}};
        if (bounds.capacity) {
            j["capacity"] = rational_json(*bounds.capacity);
            j["beta"] = rational_json(1 / *bounds.capacity);
        }
        os << j.dump(2) << '\n';
    } else {
        os << "instance: " << format_instance(inst) << '\n';
        os << "lower: " << format_rational(bounds.lower) << '\n';
        os << "upper: " << format_rational(bounds.upper) << '\n';
        os << "a_min: " << bounds.opt.a_min << '\n';
        os << "b_min: " << bounds.opt.b_min << '\n';
        os << "gap_bound: " << format_rational(bounds.gap) << '\n';
        if (bounds.capacity)
            os << "capacity: " << format_rational(*bounds.capacity)
               << ", beta: " << format_rational(1 / *bounds.capacity) << '\n';
        else
            os << "capacity: not covered by the special case\n";
    }
    return kExitOk;
}

int cmd_pairs(const std::string& literal, long long a_max, long long b_max,
              const std::string& format, const std::string& out_path) {
    SciInstance inst = parse_instance(literal);
    OptimalPair opt = find_optimal_pair(inst);
    FallbackPair fb = fallback_pair(inst);

    struct Row {
        long long a, b;
        BigInt witness;
        Rational rate;
    };
    std::vector<Row> members;
    for (long long a = 0; a <= a_max; ++a)
        for (long long b = 1; b <= b_max; ++b) {
            RatePair rp = is_member(inst, a, b);
            if (rp.member) members.push_back({a, b, rp.gcd_witness, achieved_rate(inst, a, b)});
        }
    std::stable_sort(members.begin(), members.end(),
                     [](const Row& x, const Row& y) { return x.rate < y.rate; });

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "json") {
        json rows = json::array();
        for (const Row& r : members)
            rows.push_back(json{{"a", r.a},
                                {"b", r.b},
                                {"gcd", r.witness.str()},
                                {"rate", rational_json(r.rate)},
                                {"optimal", r.a == opt.a_min && r.b == opt.b_min},
                                {"fallback", r.a == fb.alpha && r.b == fb.gamma}});
        json j{{"instance", format_instance(inst)},
               {"members", std::move(rows)},
               {"fallback", {{"alpha", fb.alpha}, {"gamma", fb.gamma}}}};
        os << j.dump(2) << '\n';
    } else {
        os << "instance: " << format_instance(inst) << '\n';
        if (members.empty()) {
            os << "warning: no members with a <= " << a_max << ", b <= " << b_max
               << "; the fallback pair (alpha,gamma) = (" << fb.alpha << "," << fb.gamma
               << ") is always a member\n";
        } else {
            os << "a\tb\tgcd\trate\n";
            for (const Row& r : members) {
                os << r.a << '\t' << r.b << '\t' << r.witness << '\t'
                   << format_rational(r.rate);
                if (r.a == opt.a_min && r.b == opt.b_min) os << "\t[optimal]";
                if (r.a == fb.alpha && r.b == fb.gamma) os << "\t[fallback]";
                os << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_codebook(const std::string& literal, const PairOpt& pair,
                 const std::string& format, const std::string& out_path) {
    SciInstance inst = parse_instance(literal);
    CodeBook cb = pair.set ? build_codebook(inst, pair.a, pair.b) : build_codebook(inst);

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);

    auto y_terms = [&](std::size_t sym) {
        std::size_t k = sym / cb.b, j = sym % cb.b;
        std::string line = coord_label('y', k, j) + " =";
        bool first = true;
        for (const Term& term : cb.extended_map[sym]) {
            line += first ? " " : " + ";
            line += coord_label('x', term.msg, term.coord);
            first = false;
        }
        return line;
    };
    auto c_line = [&](std::size_t col) {
        std::string line = "c[" + std::to_string(col) + "] =";
        bool first = true;
        for (std::size_t sym = 0; sym < cb.air.matrix.rows(); ++sym) {
            if (cb.air.matrix.at(sym, col) == 0) continue;
            line += first ? " " : " + ";
            line += coord_label('y', sym / cb.b, sym % cb.b);
            first = false;
        }
        return line;
    };

    Rational rate(cb.n, cb.t);
    if (format == "json") {
        json ys = json::array(), cs = json::array();
        for (std::size_t sym = 0; sym < cb.extended_map.size(); ++sym)
            ys.push_back(y_terms(sym));
        for (std::size_t col = 0; col < cb.n; ++col) cs.push_back(c_line(col));
        json j{{"instance", format_instance(inst)},
               {"a", cb.a},
               {"b", cb.b},
               {"t", cb.t},
               {"N", cb.n},
               {"rate", rational_json(rate)},
               {"extended_symbols", std::move(ys)},
               {"code_symbols", std::move(cs)},
               {"air", matrix_json(cb.air.matrix)}};
        os << j.dump(2) << '\n';
    } else {
        os << "instance: " << format_instance(inst) << '\n';
        os << "pair: a=" << cb.a << ",b=" << cb.b << '\n';
        os << "t: " << cb.t << "\nN: " << cb.n << '\n';
        os << "rate: " << format_rational(rate) << '\n';
        for (std::size_t sym = 0; sym < cb.extended_map.size(); ++sym)
            os << y_terms(sym) << '\n';
        for (std::size_t col = 0; col < cb.n; ++col) os << c_line(col) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& literal, const PairOpt& pair, unsigned p,
               std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
    SciInstance inst = parse_instance(literal);
    FieldSpec field(p);
    CodeBook cb = pair.set ? build_codebook(inst, pair.a, pair.b) : build_codebook(inst);
    DecodabilityReport report = verify_decodability(cb, field);

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);

    if (!report.all_ok()) {
        if (format == "json") {
            json fails = json::array();
            for (const auto& r : report.receivers)
                if (!r.ok) fails.push_back(json{{"receiver", r.receiver},
                                                {"coords", r.failed_coords}});
            os << json{{"instance", format_instance(inst)},
                       {"ok", false},
                       {"failures", std::move(fails)}}
                      .dump(2)
               << '\n';
        } else {
            os << "FAIL\n";
            for (const auto& r : report.receivers)
                if (!r.ok) {
                    os << "receiver " << r.receiver << " cannot decode coords:";
                    for (std::size_t c : r.failed_coords) os << " " << c;
                    os << '\n';
                }
        }
        return kExitVerifyFailed;
    }

    std::vector<DecodingRecipe> recipes = derive_recipes(cb, field);
    RoundtripReport rt = simulate_roundtrip(cb, recipes, seed, field);

    if (format == "json") {
        json recs = json::array();
        for (const DecodingRecipe& recipe : recipes) {
            json coords = json::array();
            for (std::size_t c = 0; c < cb.t; ++c) {
                json corr = json::array();
                for (const auto& [term, coeff] : recipe.coords[c].correction)
                    corr.push_back(json{{"msg", term.msg},
                                        {"coord", term.coord + 1},
                                        {"coeff", int(coeff)}});
                coords.push_back(json{{"combo", combo_label(recipe.coords[c].combo, p)},
                                      {"correction", std::move(corr)}});
            }
            recs.push_back(json{{"receiver", recipe.receiver}, {"coords", std::move(coords)}});
        }
        os << json{{"instance", format_instance(inst)},
                   {"ok", rt.ok()},
                   {"field", p},
                   {"recovered", rt.recovered},
                   {"total", rt.total},
                   {"recipes", std::move(recs)}}
                  .dump(2)
           << '\n';
    } else {
        os << "instance: " << format_instance(inst) << '\n';
        os << "pair: a=" << cb.a << ",b=" << cb.b << ", field: GF(" << p << ")\n";
        os << "decodability: PASS (" << inst.K() << " receivers x " << cb.t
           << " coordinates)\n";
        for (const DecodingRecipe& recipe : recipes) {
            for (std::size_t c = 0; c < cb.t; ++c) {
                os << coord_label('x', recipe.receiver, c) << " <- "
                   << combo_label(recipe.coords[c].combo, p);
                if (!recipe.coords[c].correction.empty()) {
                    os << " | side:";
                    for (const auto& [term, coeff] : recipe.coords[c].correction) {
                        os << ' ';
                        if (coeff != 1) os << unsigned(coeff) << '*';
                        os << coord_label('x', term.msg, term.coord);
                    }
                }
                os << '\n';
            }
        }
        os << "roundtrip(seed=" << seed << "): " << rt.recovered << "/" << rt.total
           << " coordinates recovered\n";
    }
    return rt.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_simulate(const std::string& literal, const PairOpt& pair, unsigned p,
                 std::uint64_t seed, std::size_t trials, const std::string& format,
                 const std::string& out_path) {
    SciInstance inst = parse_instance(literal);
    FieldSpec field(p);
    CodeBook cb = pair.set ? build_codebook(inst, pair.a, pair.b) : build_codebook(inst);
    std::vector<DecodingRecipe> recipes = derive_recipes(cb, field);

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    std::size_t recovered = 0, total = 0;
    bool ok = true;
    json runs = json::array();
    for (std::size_t i = 0; i < trials; ++i) {
        RoundtripReport rt = simulate_roundtrip(cb, recipes, seed + i, field);
        recovered += rt.recovered;
        total += rt.total;
        ok = ok && rt.ok();
        if (format == "json")
            runs.push_back(json{{"seed", seed + i},
                                {"recovered", rt.recovered},
                                {"total", rt.total}});
        else
            os << "seed " << (seed + i) << ": " << rt.recovered << "/" << rt.total
               << (rt.ok() ? " ok" : " FAIL") << '\n';
    }
    if (format == "json")
        os << json{{"instance", format_instance(inst)},
                   {"field", p},
                   {"ok", ok},
                   {"recovered", recovered},
                   {"total", total},
                   {"runs", std::move(runs)}}
                  .dump(2)
           << '\n';
    else
        os << (ok ? "PASS" : "FAIL") << ": " << recovered << "/" << total << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const std::string& literal, std::size_t n_max, const std::string& format,
               const std::string& out_path) {
    SciInstance inst = parse_instance(literal);
    auto result = minimal_scalar_code(inst, n_max);

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "json") {
        json j{{"instance", format_instance(inst)}, {"n_max", n_max}};
        if (result) {
            j["minimal_length"] = result->minimal_length;
            j["witness"] = matrix_json(result->witness);
        } else {
            j["minimal_length"] = nullptr;
        }
        os << j.dump(2) << '\n';
    } else {
        os << "instance: " << format_instance(inst) << '\n';
        if (result) {
            os << "minimal_length: " << result->minimal_length << '\n';
            print_matrix(os, result->witness);
        } else {
            os << "no decodable scalar code with N <= " << n_max << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-optimal vector linear index codes for symmetric consecutive interference"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--output", out_path, "write output to a file instead of stdout");

    std::size_t air_g = 0, air_h = 0;
    CLI::App* air = app.add_subcommand("air", "construct an AIR matrix");
    air->add_option("rows", air_g, "row count")->required();
    air->add_option("cols", air_h, "column count")->required();

    std::string inst_literal;
    CLI::App* bounds = app.add_subcommand("bounds", "broadcast-rate bounds and capacity");
    bounds->add_option("instance", inst_literal, "instance literal K=..,D=..,U=..,m=..")
        ->required();

    long long a_max = 10, b_max = 10;
    CLI::App* pairs = app.add_subcommand("pairs", "enumerate members of S_{K,D,U,m}");
    pairs->add_option("instance", inst_literal)->required();
    pairs->add_option("--a-max", a_max, "largest a to scan")->capture_default_str();
    pairs->add_option("--b-max", b_max, "largest b to scan")->capture_default_str();

    PairOpt pair;
    CLI::App* codebook = app.add_subcommand("codebook", "emit the encoder");
    codebook->add_option("instance", inst_literal)->required();
    add_pair_option(codebook, pair);

    unsigned field_p = 2;
    std::uint64_t seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "verify decodability and recipes");
    verify->add_option("instance", inst_literal)->required();
    add_pair_option(verify, pair);
    verify->add_option("--field", field_p, "prime field modulus")->capture_default_str();
    verify->add_option("--seed", seed, "roundtrip seed")->capture_default_str();

    std::size_t trials = 1;
    CLI::App* simulate = app.add_subcommand("simulate", "roundtrip simulation only");
    simulate->add_option("instance", inst_literal)->required();
    add_pair_option(simulate, pair);
    simulate->add_option("--field", field_p)->capture_default_str();
    simulate->add_option("--seed", seed)->capture_default_str();
    simulate->add_option("--trials", trials)->capture_default_str();

    std::size_t n_max = 5;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force minimal scalar code");
    oracle->add_option("instance", inst_literal)->required();
    oracle->add_option("--n-max", n_max, "largest code length to try")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (air->parsed()) return cmd_air(air_g, air_h, format, out_path);
        if (bounds->parsed()) return cmd_bounds(inst_literal, format, out_path);
        if (pairs->parsed()) return cmd_pairs(inst_literal, a_max, b_max, format, out_path);
        if (codebook->parsed()) return cmd_codebook(inst_literal, pair, format, out_path);
        if (verify->parsed())
            return cmd_verify(inst_literal, pair, field_p, seed, format, out_path);
        if (simulate->parsed())
            return cmd_simulate(inst_literal, pair, field_p, seed, trials, format, out_path);
        if (oracle->parsed()) return cmd_oracle(inst_literal, n_max, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParamError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitParamError;
}
