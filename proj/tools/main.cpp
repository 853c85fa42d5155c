#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "covrough/approx.hpp"
#include "covrough/closure.hpp"
#include "covrough/json_io.hpp"
#include "covrough/matroid.hpp"
#include "covrough/reduct.hpp"
#include "covrough/sweep.hpp"

namespace {

using namespace covrough;

int universe_cap() {
    const char* v = std::getenv("RM_UNIVERSE_CAP");
    if (v == nullptr || *v == '\0') return Universe::default_cap;
    int cap = 0;
    try {
        std::size_t pos = 0;
        cap = std::stoi(v, &pos);
        if (pos != std::string(v).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw error(std::string("RM_UNIVERSE_CAP is not an integer: \"") + v + "\"");
    }
    if (cap < 1 || cap > Universe::hard_cap) {
        throw error("RM_UNIVERSE_CAP " + std::to_string(cap) + " out of range [1, " +
                    std::to_string(Universe::hard_cap) + "]");
    }
    return cap;
}

Covering load_covering(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_covering(buf.str(), universe_cap());
}

Subset subset_from_arg(const Covering& c, const std::string& arg) {
    std::vector<std::string> labels;
    if (!arg.empty()) {
        std::string cur;
        for (char ch : arg) {
            if (ch == ',') {
                labels.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        labels.push_back(cur);
    }
    return Subset::of_labels(c.universe(), labels);
}

const char* yesno(bool b) { return b ? "true" : "false"; }

std::string indented(const std::string& block) {
    std::string out;
    std::istringstream in(block);
    std::string line;
    while (std::getline(in, line)) {
        out += "  " + line + "\n";
    }
    return out;
}

int cmd_info(const std::string& path, bool quiet) {
    Covering c = load_covering(path);
    if (quiet) return 0;
    const Universe& u = c.universe();
    SetFamily nf = neighborhood_family(c);
    SetFamily inf = indiscernible_family(c);
    Covering red = compute_reduct(c);
    std::cout << "universe: " << Subset::full(u).to_string() << "\n"
              << "blocks: " << c.block_count() << "\n"
              << "covering: " << c.to_string() << "\n"
              << "unary: " << yesno(is_unary(c)) << "\n"
              << "neighborhood family: " << nf.to_string()
              << " (partition: " << yesno(is_partition(nf)) << ")\n"
              << "indiscernible family: " << inf.to_string()
              << " (partition: " << yesno(is_partition(inf)) << ")\n"
              << "reduct: " << red.to_string()
              << " (partition: " << yesno(is_partition(red.blocks_family())) << ")\n";
    return 0;
}

int cmd_approx(const std::string& path, const std::string& set_arg, const std::string& op,
               bool quiet) {
    Covering c = load_covering(path);
    Subset x = subset_from_arg(c, set_arg);
    Subset result = (op == "sl") ? lower_approx(c, x) : upper_approx(c, x);
    if (!quiet) std::cout << result.to_string() << "\n";
    return 0;
}

int cmd_closure(const std::string& path, const std::string& set_arg, const std::string& oper,
                bool quiet) {
    Covering c = load_covering(path);
    Subset x = subset_from_arg(c, set_arg);
    ClosureTable t = (oper == "induced") ? induced_closure(c) : sh_as_closure_table(c);
    if (t.covering_not_unary()) {
        std::cerr << "warning: covering is not unary; "
                     "the induced operator may not satisfy the closure axioms\n";
    }
    if (!quiet) std::cout << t.apply(x).to_string() << "\n";
    return 0;
}

int cmd_reduct(const std::string& path, bool quiet) {
    Covering c = load_covering(path);
    if (!quiet) std::cout << print_covering(compute_reduct(c)) << "\n";
    return 0;
}

int cmd_matroid(const std::string& path, bool quiet) {
    Covering c = load_covering(path);
    ClosureTable t = induced_closure(c);
    try {
        Matroid m = matroid_from_closure(t);
        nlohmann::ordered_json j;
        j["independents"] = nlohmann::ordered_json::array();
        for (mask_t member : m.independents().masks()) {
            j["independents"].push_back(Subset(c.universe(), member).labels());
        }
        j["rank"] = matroid_rank(m, Subset::full(c.universe()));
        if (!quiet) std::cout << j.dump(2) << "\n";
        return 0;
    } catch (const axioms_error& e) {
        if (!quiet) {
            std::cout << "no matroid: induced closure fails the closure axioms\n"
                      << indented(e.report().describe(c.universe()));
        }
        return 2;
    }
}

int cmd_check(const std::string& path, bool quiet) {
    Covering c = load_covering(path);
    const Universe& u = c.universe();
    ApproxPropertyReport props = property_report(c);
    AxiomReport sh_axioms = check_closure_axioms(sh_as_closure_table(c));
    AxiomReport induced_axioms = check_closure_axioms(induced_closure(c));
    bool finding = !props.all_pass() || !sh_axioms.all_pass() || !induced_axioms.all_pass();

    if (!quiet) {
        std::cout << "operator laws:\n";
        for (const auto& r : props.laws) {
            std::cout << "  " << approx_law_name(r.law) << ": " << (r.pass ? "pass" : "FAIL");
            if (!r.pass) {
                std::cout << "  X=" << mask_to_string(u, r.x);
                if (r.law == ApproxLaw::H4 || r.law == ApproxLaw::L6 || r.law == ApproxLaw::H6) {
                    std::cout << " Y=" << mask_to_string(u, r.y);
                }
            }
            std::cout << "\n";
        }
        std::cout << "SH closure axioms:\n" << indented(sh_axioms.describe(u));
        std::cout << "induced closure axioms:\n" << indented(induced_axioms.describe(u));
        std::cout << "result: " << (finding ? "findings present" : "all checks pass") << "\n";
    }
    return finding ? 2 : 0;
}

int cmd_sweep(int n, bool exhaustive, long samples, std::uint64_t seed,
              const std::string& json_path, bool quiet) {
    if (exhaustive == (samples >= 0)) {
        throw error("choose exactly one of --exhaustive or --random <samples>");
    }
    SweepReport rep = exhaustive
                          ? sweep(n, SweepMode::exhaustive)
                          : sweep(n, SweepMode::random, samples, seed, universe_cap());
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw error("cannot write \"" + json_path + "\"");
        out << rep.to_json_text() << "\n";
    }
    if (!quiet) std::cout << rep.to_text();
    return rep.total_disagreements() > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second-type covering rough sets and matroid toolkit"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet,-q", quiet, "suppress reports; exit codes carry the result");

    std::string file, set_arg, op, oper, json_path;
    int n = 0;
    bool exhaustive = false;
    long samples = -1;
    std::uint64_t seed = 0;
    int exit_code = 0;

    auto* info = app.add_subcommand("info", "covering summary: families, reduct, flags");
    info->fallthrough();
    info->add_option("file", file, "covering JSON file")->required();
    info->callback([&]() { exit_code = cmd_info(file, quiet); });

    auto* approx = app.add_subcommand("approx", "lower/upper approximation of a subset");
    approx->fallthrough();
    approx->add_option("file", file, "covering JSON file")->required();
    approx->add_option("--set", set_arg, "comma-separated labels; empty string for {}")
        ->required();
    approx->add_option("--op", op, "operator")
        ->required()
        ->check(CLI::IsMember({"sl", "sh"}));
    approx->callback([&]() { exit_code = cmd_approx(file, set_arg, op, quiet); });

    auto* closure = app.add_subcommand("closure", "closure of a subset under an operator");
    closure->fallthrough();
    closure->add_option("file", file, "covering JSON file")->required();
    closure->add_option("--set", set_arg, "comma-separated labels; empty string for {}")
        ->required();
    closure->add_option("--operator", oper, "closure operator")
        ->required()
        ->check(CLI::IsMember({"induced", "sh"}));
    closure->callback([&]() { exit_code = cmd_closure(file, set_arg, oper, quiet); });

    auto* reduct = app.add_subcommand("reduct", "remove reducible blocks; prints covering JSON");
    reduct->fallthrough();
    reduct->add_option("file", file, "covering JSON file")->required();
    reduct->callback([&]() { exit_code = cmd_reduct(file, quiet); });

    auto* matroid = app.add_subcommand("matroid",
                                       "matroid induced by the covering, if one exists");
    matroid->fallthrough();
    matroid->add_option("file", file, "covering JSON file")->required();
    matroid->callback([&]() { exit_code = cmd_matroid(file, quiet); });

    auto* check = app.add_subcommand("check", "operator laws and closure axiom reports");
    check->fallthrough();
    check->add_option("file", file, "covering JSON file")->required();
    check->callback([&]() { exit_code = cmd_check(file, quiet); });

    auto* sweep_cmd = app.add_subcommand("sweep", "verify all theorems over a covering stream");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--n", n, "universe size")->required();
    sweep_cmd->add_flag("--exhaustive", exhaustive, "enumerate every covering (n <= 4)");
    sweep_cmd->add_option("--random", samples, "number of random coverings to sample");
    sweep_cmd->add_option("--seed", seed, "seed for --random (default 0)");
    sweep_cmd->add_option("--json", json_path, "also write the report as JSON to this file");
    sweep_cmd->callback(
        [&]() { exit_code = cmd_sweep(n, exhaustive, samples, seed, json_path, quiet); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
