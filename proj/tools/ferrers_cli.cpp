// Command-line front end: parses arguments and dispatches to ferrers::cli.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ferrers/cli.hpp"

namespace {

using namespace ferrers;
using namespace ferrers::cli;

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--oracle", opt.oracle, "cross-check against the facet oracle");
    cmd->add_flag("--hilbert", opt.hilbert, "cross-check against the Hilbert-counting oracle");
    cmd->add_flag("--bounds", opt.bounds, "report the mu bound and profile bounds");
    cmd->add_option("--order", opt.order, "shedding order")
        ->transform(CLI::CheckedTransformer(std::map<std::string, OrderFlavor>{{"induction", OrderFlavor::induction},
                                                                              {"lex", OrderFlavor::lex}}));
    cmd->add_option("--limit", opt.limit, "size limit (facets shown, diagrams swept)");
    cmd->add_option("--seed", opt.seed, "seed for random sampling");
    cmd->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
    cmd->add_option("--cache", opt.cache_capacity, "engine memo capacity (0 = unbounded)");
    cmd->add_option("--oracle-vertices", opt.oracle_vertices, "facet oracle vertex limit (at most 64)")
        ->check(CLI::Range(1, 64));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of toric rings of three-dimensional Ferrers diagrams"};
    app.require_subcommand(1);
    Options opt;
    std::string first, second;
    Box box;
    std::vector<int> box_dims;

    auto* check = app.add_subcommand("check", "projection properties, dimensions and profiles");
    check->add_option("diagram", first, "diagram JSON")->required();

    auto* inv = app.add_subcommand("invariants", "dimension, regularity, multiplicity, reduction number");
    inv->add_option("diagram", first, "diagram JSON")->required();
    add_common(inv, opt);

    auto* gens = app.add_subcommand("gens", "monomial generators and 2-minors");
    gens->add_option("diagram", first, "diagram JSON")->required();

    auto* oracle = app.add_subcommand("oracle", "facets, f- and h-vectors, Hilbert function");
    oracle->add_option("diagram", first, "diagram JSON")->required();
    add_common(oracle, opt);

    auto* compare = app.add_subcommand("compare", "monotonicity for a nested pair D1 within D2");
    compare->add_option("first", first, "diagram JSON of D1")->required();
    compare->add_option("second", second, "diagram JSON of D2")->required();
    add_common(compare, opt);

    auto* sweep = app.add_subcommand("sweep", "every diagram in a box");
    sweep->add_option("--box", box_dims, "box bounds A B C")->expected(3)->required();
    sweep->add_option("--filter", opt.filter, "which diagrams to emit")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Filter>{{"all", Filter::all}, {"pp", Filter::pp}, {"strong", Filter::strong}}));
    sweep->add_flag("--paired", opt.paired, "check monotonicity on nested strong-projection pairs");
    sweep->add_option("--sample", opt.sample, "random sample size instead of full enumeration");
    add_common(sweep, opt);

    auto* search = app.add_subcommand("search", "look for multiplicities above the box trinomial");
    search->add_option("--box", box_dims, "box bounds A B C")->expected(3)->required();
    search->add_option("--sample", opt.sample, "random sample size instead of full enumeration");
    add_common(search, opt);

    auto* gb = app.add_subcommand("gb-check", "bounded-degree Groebner basis check of the 2-minors");
    gb->add_option("diagram", first, "diagram JSON")->required();
    gb->add_option("--degree", opt.degree, "largest degree checked")->check(CLI::Range(1, 12));
    add_common(gb, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    auto run = [&]() -> Outcome {
        if (box_dims.size() == 3) box = {box_dims[0], box_dims[1], box_dims[2]};
        if (*check) return guarded([&] { return cmd_check(parse_diagram(first)); });
        if (*inv) return guarded([&] { return cmd_invariants(parse_diagram(first), opt); });
        if (*gens) return guarded([&] { return cmd_gens(parse_diagram(first)); });
        if (*oracle) return guarded([&] { return cmd_oracle(parse_diagram(first), opt); });
        if (*compare) return guarded([&] { return cmd_compare(parse_diagram(first), parse_diagram(second), opt); });
        if (*sweep) return cmd_sweep(box, opt);
        if (*search) return cmd_search(box, opt);
        return guarded([&] { return cmd_gb_check(parse_diagram(first), opt); });
    };
    const Outcome out = run();
    std::cout << out.output << '\n';
    return out.exit_code;
}
