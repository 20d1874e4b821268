// Command-line front end: classify parameter sets, generate codes by both
// paths, run the structural check suite, compute/bound distances, and replay
// the published example rows.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wgc/examples.hpp"
#include "wgc/report.hpp"

namespace {

using nlohmann::json;

struct CommonArgs {
    std::uint64_t n1 = 0, n2 = 0, q = 0;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--n1", args.n1, "first odd prime")->required();
    cmd->add_option("--n2", args.n2, "second odd prime")->required();
    cmd->add_option("--q", args.q, "prime field size")->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
}

void emit(const json& j, const std::string& format) {
    if (format == "table")
        std::cout << wgc::render_table(j);
    else
        std::cout << j.dump(2) << "\n";
}

int cmd_classify(const CommonArgs& args) {
    wgc::SequenceContext ctx = wgc::SequenceContext::build(args.n1, args.n2, args.q);
    json j{
        {"system", wgc::system_to_json(ctx.system())},
        {"ext_degree", ctx.ext_degree()},
        {"classification", wgc::classification_to_json(wgc::classify(ctx))},
    };
    emit(j, args.format);
    return 0;
}

int cmd_generate(const CommonArgs& args) {
    wgc::SequenceContext ctx = wgc::SequenceContext::build(args.n1, args.n2, args.q);
    wgc::DiscrepancyReport rep = wgc::cross_check(ctx);
    emit(wgc::cross_check_to_json(ctx.system(), rep), args.format);
    return rep.match ? 0 : 2;
}

int cmd_check(const CommonArgs& args) {
    wgc::SequenceContext ctx = wgc::SequenceContext::build(args.n1, args.n2, args.q);
    auto checks = wgc::run_all_checks(ctx);
    emit(wgc::checks_to_json(checks), args.format);
    for (const auto& c : checks)
        if (!c.ok) return 1;
    return 0;
}

int cmd_distance(const CommonArgs& args, int theorem, const std::vector<int>& indices,
                 unsigned wmax, std::uint64_t enum_budget) {
    wgc::SequenceContext ctx = wgc::SequenceContext::build(args.n1, args.n2, args.q);
    wgc::CyclicCode code;
    json j;
    if (theorem == 0) {
        code = wgc::generator_via_gcd(ctx);
    } else {
        // leading entries of --indices carry the subscripts of the
        // construction: T3 i; T4 none; T5 i,j; T6 j; T7 i,j,h,t; T8 i,j,h
        int i = 0;
        std::vector<int> ds(indices);
        auto id = static_cast<wgc::TheoremId>(theorem);
        if (id == wgc::TheoremId::T3 || id == wgc::TheoremId::T5 || id == wgc::TheoremId::T7) {
            if (ds.empty()) throw CLI::ValidationError("--indices", "missing the i subscript");
            i = ds.front();
            ds.erase(ds.begin());
        }
        code = wgc::theorem_constructor(ctx, id, i, ds);
        j["theorem_distance"] = wgc::distance_to_json(wgc::theorem_bound(code, id));
    }
    j["code"] = wgc::code_to_json(ctx.system(), code);

    wgc::DistanceResult dr = wgc::exact_min_distance(code, enum_budget);
    if (dr.kind == wgc::DistanceResult::Kind::Inconclusive && wmax > 0)
        dr = wgc::min_weight_support_search(code, wmax);
    j["distance"] = wgc::distance_to_json(dr);
    emit(j, args.format);
    return 0;
}

int cmd_examples(const std::string& format) {
    auto rows = wgc::run_examples();
    emit(wgc::examples_to_json(rows), format);
    return wgc::examples_exit_code(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes from two-prime generalized cyclotomic sequences of order 6"};
    app.require_subcommand(1);

    CommonArgs classify_args, generate_args, check_args, distance_args;
    int theorem = 0;
    std::vector<int> indices;
    unsigned wmax = 0;
    std::uint64_t enum_budget = std::uint64_t{1} << 22;
    std::string examples_format = "json";

    auto* classify = app.add_subcommand("classify", "cyclotomic system and theorem-branch classification");
    add_common(classify, classify_args);

    auto* generate = app.add_subcommand("generate", "generator polynomial by both paths, cross-checked");
    add_common(generate, generate_args);

    auto* check = app.add_subcommand("check", "structural identity suite for a parameter set");
    add_common(check, check_args);

    auto* distance = app.add_subcommand("distance", "minimum distance, exact or certified bounds");
    add_common(distance, distance_args);
    distance->add_option("--theorem", theorem, "construction number 3..8; default is the sequence code")
        ->check(CLI::Range(3, 8));
    distance->add_option("--indices", indices, "construction subscripts, comma separated")
        ->delimiter(',');
    distance->add_option("--wmax", wmax, "support-search weight limit when enumeration is out of reach");
    distance->add_option("--enum-budget", enum_budget, "codeword cap for full enumeration")
        ->capture_default_str();

    auto* examples = app.add_subcommand("examples", "replay the published example rows");
    examples->add_option("--format", examples_format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(classify_args);
        if (generate->parsed()) return cmd_generate(generate_args);
        if (check->parsed()) return cmd_check(check_args);
        if (distance->parsed())
            return cmd_distance(distance_args, theorem, indices, wmax, enum_budget);
        return cmd_examples(examples_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
