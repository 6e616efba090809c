#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fsig/analysis.hpp"
#include "fsig/errors.hpp"
#include "fsig/input.hpp"
#include "fsig/suites.hpp"

namespace {

using namespace fsig;

// exact value, annotated with a 12-digit decimal when it is not an integer
std::string pretty(const Rational& q) {
    if (is_integer(q)) return to_string(q);
    return to_string(q) + " ≈ " + to_decimal(q);
}

struct DivisorArgs {
    std::string variety;
    std::string divisor;
    std::string cls;

    void attach(CLI::App* cmd) {
        cmd->add_option("--variety", variety, "builtin name or fan JSON file")->required();
        cmd->add_option("--divisor", divisor, "comma-separated coefficients");
        cmd->add_option("--class", cls, "class dictionary form, e.g. 2H-1E or 1,2");
    }

    TDivisor resolve(VarietySpec& v) const {
        v = resolve_variety(variety);
        return parse_divisor_option(v, divisor, cls);
    }
};

struct GridArgs {
    std::string variety;
    std::string basis;
    std::vector<std::string> ranges;
    std::string step = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--variety", variety, "builtin name or fan JSON file")->required();
        cmd->add_option("--basis", basis,
                        "semicolon-separated basis classes (default: class dictionary)");
        cmd->add_option("--range", ranges, "lo:hi per basis coordinate")->required();
        cmd->add_option("--step", step, "grid step (rational)");
    }

    GridSpec resolve(VarietySpec& v, std::vector<std::string>& names) const {
        v = resolve_variety(variety);
        GridSpec spec;
        spec.basis = parse_basis_option(v, basis);
        for (const auto& r : ranges) spec.ranges.push_back(parse_range(r));
        if (spec.ranges.size() != spec.basis.classes.size())
            throw input_error("need one --range per basis class (" +
                              std::to_string(spec.basis.classes.size()) + "), got " +
                              std::to_string(spec.ranges.size()));
        spec.step = parse_rational(step);
        if (!(spec.step > 0)) throw input_error("--step must be positive");
        names = grid_coord_names(v, spec.ranges.size(), basis.empty());
        return spec;
    }
};

int cmd_eval(const DivisorArgs& args) {
    VarietySpec v;
    TDivisor d = args.resolve(v);
    Rational s = fsignature(v.fan, d);
    Rational vol = volume_of_divisor(v.fan, d);
    std::cout << "s = " << pretty(s) << "\n";
    std::cout << "vol = " << pretty(vol) << "\n";
    return 0;
}

int cmd_volume(const DivisorArgs& args) {
    VarietySpec v;
    TDivisor d = args.resolve(v);
    std::cout << "vol = " << pretty(volume_of_divisor(v.fan, d)) << "\n";
    return 0;
}

int cmd_freerank(const DivisorArgs& args, long p, int e_max) {
    VarietySpec v;
    TDivisor d = args.resolve(v);
    if (!is_integral(d))
        throw input_error("freerank needs an integral divisor; clear denominators first");
    auto report = convergence_report(v.fan, d, Int(p), e_max);
    std::cout << "e,a_e,normalized,error\n";
    for (const auto& row : report.rows)
        std::cout << row.e << "," << row.a_e.get_str() << "," << to_string(row.normalized) << ","
                  << to_string(row.error) << "\n";
    return 0;
}

void print_grid_header(const std::vector<std::string>& names) {
    for (const auto& n : names) std::cout << n << ",";
    std::cout << "norm,s,vol,bound,ratio,flag\n";
}

int cmd_grid(const GridArgs& args) {
    VarietySpec v;
    std::vector<std::string> names;
    GridSpec spec = args.resolve(v, names);
    auto rows = evaluate_grid(v.fan, spec);
    print_grid_header(names);
    for (const auto& row : rows) {
        for (const auto& c : row.coords) std::cout << to_string(c) << ",";
        std::cout << to_string(row.norm) << "," << to_string(row.s) << "," << to_string(row.vol)
                  << "," << (row.bound ? to_string(*row.bound) : "") << ","
                  << (row.ratio ? to_string(*row.ratio) : "") << "," << row.flag << "\n";
    }
    return 0;
}

int cmd_plotdata(const GridArgs& args) {
    VarietySpec v;
    std::vector<std::string> names;
    GridSpec spec = args.resolve(v, names);
    auto rows = evaluate_grid(v.fan, spec);
    for (const auto& row : rows) {
        for (const auto& c : row.coords) std::cout << to_decimal(c) << ",";
        std::cout << to_decimal(row.s) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& suite, long p, int e) {
    auto reports = run_suites(suite, Int(p), e);
    std::cout << reports_to_json(reports);
    for (const auto& rep : reports) std::cerr << report_summary(rep) << "\n";
    return all_passed(reports) ? 0 : 1;
}

int cmd_list() {
    for (const auto& name : builtin_names()) {
        const Builtin& b = builtin(name);
        std::cout << name << ": dim " << b.fan.dim << ", rays";
        for (const auto& ray : b.fan.rays) {
            std::cout << " (";
            for (size_t i = 0; i < ray.size(); ++i)
                std::cout << (i ? "," : "") << ray[i].get_str();
            std::cout << ")";
        }
        std::cout << ", classes: " << b.class_names << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact F-signature computations on toric varieties"};
    app.require_subcommand(1);

    DivisorArgs eval_args, vol_args, fr_args;
    GridArgs grid_args, plot_args;
    long fr_p = 2;
    int fr_e = 3;
    std::string suite;
    long check_p = 0;
    int check_e = 0;

    auto* eval = app.add_subcommand("eval", "exact F-signature and volume of an ample class");
    eval_args.attach(eval);
    auto* vol = app.add_subcommand("volume", "normalized volume of a divisor class");
    vol_args.attach(vol);
    auto* freerank =
        app.add_subcommand("freerank", "Frobenius free ranks a_e and convergence errors");
    fr_args.attach(freerank);
    freerank->add_option("--p", fr_p, "prime")->required();
    freerank->add_option("--e", fr_e, "largest level e")->required();
    auto* grid = app.add_subcommand("grid", "evaluate s, vol, bound, ratio over a grid");
    grid_args.attach(grid);
    auto* plotdata = app.add_subcommand("plotdata", "decimal coordinate/value tuples for plotting");
    plot_args.attach(plotdata);
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "formulas|scaling|degrees|convergence|bounds|boundary|"
                                        "lipschitz|key-inequality|ratio|all")
        ->required();
    check->add_option("--p", check_p, "restrict prime sweeps to this prime");
    check->add_option("--e", check_e, "restrict level sweeps to this level");
    auto* list = app.add_subcommand("list", "builtin varieties and their class dictionaries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_args);
        if (vol->parsed()) return cmd_volume(vol_args);
        if (freerank->parsed()) return cmd_freerank(fr_args, fr_p, fr_e);
        if (grid->parsed()) return cmd_grid(grid_args);
        if (plotdata->parsed()) return cmd_plotdata(plot_args);
        if (check->parsed()) return cmd_check(suite, check_p, check_e);
        if (list->parsed()) return cmd_list();
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
