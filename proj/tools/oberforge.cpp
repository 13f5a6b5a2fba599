// Command-line front end: wires JSON files to the library operations.
//
// Exit codes: 0 success/pass, 1 mathematical rejection (with a witness
// report), 2 usage or I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oberforge/oberforge.hpp"

namespace {

using namespace oberforge;

constexpr int kExitPass = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParameterError("malformed JSON in " + path + ": " + e.what());
    }
}

// Inline JSON (starts with '{') or a path to a JSON file.
GroupSpec parse_group_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        try {
            return group_spec_from_json(json::parse(arg));
        } catch (const json::parse_error& e) {
            throw ParameterError(std::string("malformed inline group JSON: ") + e.what());
        }
    }
    return group_spec_from_json(read_json_file(arg));
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ParameterError("cannot write " + tmp);
        out << content << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw ParameterError("cannot rename " + tmp);
}

void write_artifact(const std::string& path, const json& j) {
    if (!path.empty()) atomic_write(path, j.dump(2));
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParameterError("cannot parse integer list item \"" + item + "\"");
        }
    }
    return out;
}

// Starter input: a factor file plus k (flag wins over the certificate block).
struct StarterInput {
    Factor factor;
    int k;
};

StarterInput load_starter_input(const std::string& path, int k_flag) {
    json j = read_json_file(path);
    Factor f = factor_from_json(j);
    int k = k_flag;
    if (k <= 0) {
        if (j.contains("certificate") && j.at("certificate").contains("k"))
            k = j.at("certificate").at("k").get<int>();
        else
            throw ParameterError("no --k given and " + path + " carries no certificate");
    }
    return {std::move(f), k};
}

struct CommonFlags {
    bool pretty = false;
    std::string out;
};

void emit(const json& j, const std::string& pretty_text, bool pretty) {
    if (pretty)
        std::cout << pretty_text << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

std::uint64_t env_node_budget(std::uint64_t fallback) {
    const char* env = std::getenv("OBERFORGE_BUDGET");
    if (!env) return fallback;
    try {
        return std::stoull(std::string(env).substr(0, std::string(env).find(',')));
    } catch (const std::exception&) {
        throw ParameterError("cannot parse OBERFORGE_BUDGET");
    }
}

double env_time_budget(double fallback) {
    const char* env = std::getenv("OBERFORGE_BUDGET");
    if (!env) return fallback;
    const std::string s(env);
    const auto comma = s.find(',');
    if (comma == std::string::npos) return fallback;
    try {
        return std::stod(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw ParameterError("cannot parse OBERFORGE_BUDGET");
    }
}

int cmd_verify(const std::string& starter_path, int k, const CommonFlags& flags) {
    auto input = load_starter_input(starter_path, k);
    auto v = verify_starter(input.factor, input.k);
    json rep = to_json(v, input.factor.group());
    write_artifact(flags.out, rep);
    emit(rep, v.summary(input.factor.group()), flags.pretty);
    return v.accepted ? kExitPass : kExitRejected;
}

int cmd_develop(const std::string& starter_path, int k, const CommonFlags& flags) {
    auto input = load_starter_input(starter_path, k);
    auto v = verify_starter(input.factor, input.k);
    if (!v.accepted) {
        emit(to_json(v, input.factor.group()), v.summary(input.factor.group()), flags.pretty);
        return kExitRejected;
    }
    Factorization fz = develop(*v.starter);
    write_artifact(flags.out, to_json(fz));
    std::ostringstream pretty;
    pretty << fz.factors.size() << " factors of " << fz.factors.front().edges().size()
           << " edges partition the complete graph on " << fz.group->order() + 1 << " vertices";
    json summary{{"factors", fz.factors.size()},
                 {"edges_per_factor", fz.factors.front().edges().size()},
                 {"vertices", fz.group->order() + 1},
                 {"k", fz.k}};
    if (fz.k == 2) {
        auto sig = op_signature(fz.factors.front());
        summary["signature"] = sig.to_string();
        pretty << ", each " << sig.to_string();
    }
    emit(summary, pretty.str(), flags.pretty);
    return kExitPass;
}

int cmd_lift(const std::string& starter_path, int k, int n, const CommonFlags& flags) {
    if (k > 0 && k != 2) throw ParameterError("lift requires a 2-starter (k = 2)");
    auto input = load_starter_input(starter_path, 2);
    auto v = verify_starter(input.factor, 2);
    if (!v.accepted) {
        emit(to_json(v, input.factor.group()), v.summary(input.factor.group()), flags.pretty);
        return kExitRejected;
    }
    LiftedStarter lifted = lift_2n(*v.starter, n);
    write_artifact(flags.out, to_json(lifted));
    std::ostringstream pretty;
    pretty << 2 * n << "-starter under " << lifted.lifted_group->spec().describe() << ", stabilizer "
           << format_element_set(*lifted.lifted_group, lifted.lifted.stab);
    json summary{{"k", 2 * n},
                 {"group", to_json(lifted.lifted_group->spec())},
                 {"stabilizer", lifted.lifted.stab},
                 {"edges", lifted.lifted.factor.edges().size()}};
    emit(summary, pretty.str(), flags.pretty);
    return kExitPass;
}

int cmd_double_dihedral(const std::string& starter_path, const CommonFlags& flags) {
    auto input = load_starter_input(starter_path, 2);
    auto v = verify_starter(input.factor, 2);
    if (!v.accepted) {
        emit(to_json(v, input.factor.group()), v.summary(input.factor.group()), flags.pretty);
        return kExitRejected;
    }
    Starter doubled = dihedral_double(*v.starter);
    write_artifact(flags.out, to_json(doubled));
    const FiniteGroup& g = doubled.factor.group();
    emit(json{{"k", 4},
              {"group", to_json(g.spec())},
              {"stabilizer", doubled.stab},
              {"edges", doubled.factor.edges().size()}},
         "4-starter under " + g.spec().describe() + ", stabilizer " + format_element_set(g, doubled.stab),
         flags.pretty);
    return kExitPass;
}

int cmd_split(const std::string& lifted_path, int p, const CommonFlags& flags) {
    LiftedStarter lifted = lifted_from_json(read_json_file(lifted_path));
    if (p <= 0) p = lifted.n;
    auto parts = split_lift(lifted, p);
    json files = json::array();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!flags.out.empty()) {
            const std::string path = flags.out + ".h" + std::to_string(j) + ".json";
            atomic_write(path, to_json(parts[j]).dump(2));
            files.push_back(path);
        }
    }
    auto sig = op_signature(parts.front());
    json summary{{"two_factors", parts.size()}, {"signature", sig.to_string()}, {"files", files}};
    emit(summary,
         std::to_string(parts.size()) + " two-factors, each " + sig.to_string(), flags.pretty);
    return kExitPass;
}

int cmd_solve_op(const std::string& starter_path, int k, int p, const CommonFlags& flags) {
    if (k > 0 && k != 2) throw ParameterError("solve-op requires a 2-starter (k = 2)");
    auto input = load_starter_input(starter_path, 2);
    auto v = verify_starter(input.factor, 2);
    if (!v.accepted) {
        emit(to_json(v, input.factor.group()), v.summary(input.factor.group()), flags.pretty);
        return kExitRejected;
    }
    OpSolution sol = solve_op(*v.starter, p);
    write_artifact(flags.out, to_json(sol.factorization));
    const int vertices = sol.factorization.group->order() + 1;
    std::ostringstream pretty;
    pretty << sol.signature.to_string() << " solved on " << vertices << " vertices, "
           << sol.factorization.factors.size() << " two-factors";
    json summary{{"signature", sol.signature.to_string()},
                 {"lengths", sol.signature.lengths()},
                 {"vertices", vertices},
                 {"two_factors", sol.factorization.factors.size()}};
    emit(summary, pretty.str(), flags.pretty);
    return kExitPass;
}

int cmd_search(const std::string& spec_path, const std::string& group_arg, int k,
               const std::string& signature_csv, const std::string& stabilizer_csv, std::uint64_t nodes,
               double seconds, int limit, const CommonFlags& flags) {
    // Budget precedence: built-in defaults < OBERFORGE_BUDGET < spec file < flags.
    SearchSpec spec{GroupSpec::cyclic(1), 2};
    spec.node_budget = env_node_budget(spec.node_budget);
    spec.time_budget_seconds = env_time_budget(spec.time_budget_seconds);
    if (!spec_path.empty()) {
        json j = read_json_file(spec_path);
        SearchSpec from_file = search_spec_from_json(j);
        from_file.node_budget = j.contains("node_budget") ? from_file.node_budget : spec.node_budget;
        from_file.time_budget_seconds =
            j.contains("time_budget_seconds") ? from_file.time_budget_seconds : spec.time_budget_seconds;
        spec = from_file;
    } else {
        if (group_arg.empty()) throw ParameterError("search needs --spec or --group");
        spec.group = parse_group_arg(group_arg);
        spec.k = k;
        if (!signature_csv.empty()) spec.target_signature = OPSignature(parse_int_list(signature_csv));
        if (!stabilizer_csv.empty()) spec.required_stabilizer = parse_int_list(stabilizer_csv);
    }
    if (nodes > 0) spec.node_budget = nodes;
    if (seconds > 0) spec.time_budget_seconds = seconds;

    if (limit > 1) {
        auto starters = enumerate_starters(spec, static_cast<std::size_t>(limit));
        json arr = json::array();
        for (const Starter& s : starters) arr.push_back(to_json(s));
        json out{{"count", starters.size()}, {"starters", arr}};
        if (!flags.out.empty()) write_artifact(flags.out, out);
        emit(out, std::to_string(starters.size()) + " starters found", flags.pretty);
        return starters.empty() ? kExitRejected : kExitPass;
    }

    SearchOutcome outcome = find_starter(spec);
    json rep = to_json(outcome);
    if (outcome.starter && !flags.out.empty()) write_artifact(flags.out, to_json(*outcome.starter));
    std::ostringstream pretty;
    pretty << to_string(outcome.status) << " after " << outcome.nodes << " nodes";
    if (outcome.starter)
        pretty << ": stabilizer "
               << format_element_set(outcome.starter->factor.group(), outcome.starter->stab);
    emit(rep, pretty.str(), flags.pretty);
    return outcome.status == SearchStatus::Found ? kExitPass : kExitRejected;
}

int cmd_analyze(const std::string& group_arg, int k, const CommonFlags& flags) {
    auto g = make_group(parse_group_arg(group_arg));
    RkReport rep = check_rk_necessary(*g, k);
    json j = to_json(rep);
    write_artifact(flags.out, j);
    std::ostringstream pretty;
    pretty << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n"
           << "divisibility_ok: " << (rep.divisibility_ok ? "true" : "false") << "\n"
           << "parity_ok: " << (rep.parity_ok ? "true" : "false") << "\n"
           << "class_bound_ok: " << (rep.class_bound_ok ? "true" : "false") << " ("
           << rep.involution_class_count << " involution classes, bound "
           << rep.odd_part * ((1 << rep.n_exponent) - 1) << ")\n"
           << "central_product_ok: " << (rep.central_product_ok ? "true" : "false");
    for (const std::string& reason : rep.failures) pretty << "\n  " << reason;
    emit(j, pretty.str(), flags.pretty);
    return rep.pass() ? kExitPass : kExitRejected;
}

int cmd_signature(const std::string& factor_path, const CommonFlags& flags) {
    Factor f = factor_from_json(read_json_file(factor_path));
    auto cs = cycle_structure(f);
    if (!cs.two_regular) {
        json degrees = json::array();
        for (const auto& [v, d] : cs.bad_degrees)
            degrees.push_back(json{{"vertex", vertex_to_json(v)}, {"degree", d}});
        json rep{{"two_regular", false}, {"witnesses", json{{"bad_degrees", degrees}}}};
        write_artifact(flags.out, rep);
        emit(rep, "not a 2-factor: " + std::to_string(cs.bad_degrees.size()) + " vertices off degree 2",
             flags.pretty);
        return kExitRejected;
    }
    OPSignature sig(cs.lengths);
    json rep{{"two_regular", true}, {"signature", sig.to_string()}, {"lengths", sig.lengths()}};
    write_artifact(flags.out, rep);
    emit(rep, sig.to_string(), flags.pretty);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-rotational factorizations of complete graphs: construction, search, verification"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string starter_path, lifted_path, factor_path, group_arg, spec_path, signature_csv, stabilizer_csv;
    int k = 0, n = 0, p = 0, limit = 1;
    std::uint64_t nodes = 0;
    double seconds = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--pretty", flags.pretty, "human-readable output instead of JSON");
        sub->add_option("--out", flags.out, "write the result artifact to this path");
    };

    auto* verify = app.add_subcommand("verify", "certify a factor file as a k-starter");
    verify->add_option("--starter", starter_path, "factor JSON file")->required();
    verify->add_option("--k", k, "starter order to certify");
    add_common(verify);

    auto* develop_cmd = app.add_subcommand("develop", "develop a starter into a full factorization");
    develop_cmd->add_option("--starter", starter_path, "factor JSON file")->required();
    develop_cmd->add_option("--k", k, "starter order");
    add_common(develop_cmd);

    auto* lift = app.add_subcommand("lift", "lift a 2-starter to a 2n-starter under G x Z_n");
    lift->add_option("--starter", starter_path, "factor JSON file")->required();
    lift->add_option("--n", n, "lift order (>= 2)")->required();
    lift->add_option("--k", k, "starter order (must be 2)");
    add_common(lift);

    auto* dd = app.add_subcommand("double-dihedral",
                                  "double a 2-starter under a dihedral group of order 2 mod 4");
    dd->add_option("--starter", starter_path, "factor JSON file")->required();
    add_common(dd);

    auto* split = app.add_subcommand("split", "split a lifted starter into p two-factors");
    split->add_option("--lifted", lifted_path, "lifted starter JSON file")->required();
    split->add_option("--p", p, "split order (defaults to the lift order)");
    add_common(split);

    auto* solve = app.add_subcommand("solve-op", "lift, split and develop into a 2-factorization");
    solve->add_option("--starter", starter_path, "factor JSON file")->required();
    solve->add_option("--p", p, "prime lift order")->required();
    solve->add_option("--k", k, "starter order (must be 2)");
    add_common(solve);

    auto* search = app.add_subcommand("search", "backtracking search for a k-starter");
    search->add_option("--spec", spec_path, "search spec JSON file");
    search->add_option("--group", group_arg, "group spec (inline JSON or file)");
    search->add_option("--k", k, "starter order");
    search->add_option("--signature", signature_csv, "target cycle lengths, comma separated");
    search->add_option("--stabilizer", stabilizer_csv, "required stabilizer elements, comma separated");
    search->add_option("--nodes", nodes, "node budget");
    search->add_option("--seconds", seconds, "time budget in seconds");
    search->add_option("--limit", limit, "enumerate up to this many starters");
    add_common(search);

    auto* analyze = app.add_subcommand("analyze", "necessary-condition checks for a group at k");
    analyze->add_option("--group", group_arg, "group spec (inline JSON or file)")->required();
    analyze->add_option("--k", k, "factorization order")->required();
    add_common(analyze);

    auto* signature = app.add_subcommand("signature", "cycle-length signature of a 2-factor");
    signature->add_option("--factor", factor_path, "factor JSON file")->required();
    add_common(signature);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(starter_path, k, flags);
        if (develop_cmd->parsed()) return cmd_develop(starter_path, k, flags);
        if (lift->parsed()) return cmd_lift(starter_path, k, n, flags);
        if (dd->parsed()) return cmd_double_dihedral(starter_path, flags);
        if (split->parsed()) return cmd_split(lifted_path, p, flags);
        if (solve->parsed()) return cmd_solve_op(starter_path, k, p, flags);
        if (search->parsed())
            return cmd_search(spec_path, group_arg, k, signature_csv, stabilizer_csv, nodes, seconds,
                              limit, flags);
        if (analyze->parsed()) return cmd_analyze(group_arg, k, flags);
        if (signature->parsed()) return cmd_signature(factor_path, flags);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
