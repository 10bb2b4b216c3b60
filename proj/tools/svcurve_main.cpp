// Command-line front end: analyze | count | bounds | classicality |
// am-verify | cremona. Exit codes: 0 success, 2 precondition refusal,
// 3 budget exceeded.

#include <CLI11.hpp>

#include <iostream>

#include <svcurve/svcurve.hpp>

namespace {

struct CliOptions : svcurve::Options {
    std::vector<std::string> family_and_args;
    bool json_output = false;

    void finalize() {
        if (!family_and_args.empty()) {
            family = family_and_args[0];
            for (std::size_t i = 1; i < family_and_args.size(); ++i)
                family_args.push_back(std::stoll(family_and_args[i]));
        }
    }
};

void add_common(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--p", o.p, "prime characteristic");
    cmd->add_option("--k", o.k, "extension degree of the base field");
    cmd->add_option("--curve", o.curve_text, "affine equation in X, Y");
    cmd->add_option("--family", o.family_and_args,
                    "named family with arguments: artin-mumford q | hurwitz n l | product-sextic")
        ->expected(1, 3);
    cmd->add_option("--ext-bound", o.ext_bound, "singularity scan bound s_max");
    cmd->add_option("--precision", o.precision, "series precision override");
    cmd->add_option("--budget", o.budget, "evaluation budget for exhaustive scans");
    cmd->add_flag("--json", o.json_output, "emit the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of singular plane curves over finite fields: "
                 "singularities, rational-branch counts, Frobenius classicality and "
                 "Stohr-Voloch-type bounds"};
    app.require_subcommand(1);

    CliOptions o;
    std::vector<int> count_ms;
    std::string q_arg;

    auto* analyze = app.add_subcommand("analyze", "singularities, (H), genus bound");
    auto* count = app.add_subcommand("count", "rational-branch counts N_m");
    count->add_option("--m", count_ms, "extension degrees to count")->expected(1, 8);
    auto* bounds = app.add_subcommand("bounds", "bound table for N_m");
    bounds->add_option("--m", o.m, "target extension degree");
    bounds->add_option("--u", o.u, "secondary Frobenius power");
    bounds->add_flag("--use-counts", o.use_counts, "compute the N inputs the abc row needs");
    bounds->add_flag("--certify", o.certify, "force Wronskian certification for m >= 2");
    auto* classicality = app.add_subcommand("classicality", "Frobenius order sequences");
    classicality->add_option("--m", o.m, "Frobenius power for the nu test");
    classicality->add_option("--u", o.u, "secondary power for the kappa test");
    auto* amverify = app.add_subcommand("am-verify",
                                        "verification suite for (X^q-X)(Y^q-Y)=1");
    amverify->add_option("--q", q_arg, "field size q = p^k, p > 3")->required();
    amverify->add_flag("--deep", o.deep, "raise the sampled check counts");
    auto* cremona = app.add_subcommand("cremona", "standard quadratic transformation");
    cremona->add_flag("--auto", o.auto_transform, "move --P1/--P2 to the coordinate points first");
    cremona->add_option("--P1", o.p1_text, "rational point x:y:z");
    cremona->add_option("--P2", o.p2_text, "rational point x:y:z");

    for (auto* cmd : {analyze, count, bounds, classicality, amverify, cremona})
        add_common(cmd, o);

    CLI11_PARSE(app, argc, argv);

    try {
        o.finalize();
        o.count_ms = count_ms;
        if (amverify->parsed()) o.family_args = {std::stoll(q_arg)};

        svcurve::json rep;
        std::string text;
        if (analyze->parsed()) {
            rep = svcurve::cmd_analyze(o);
        } else if (count->parsed()) {
            rep = svcurve::cmd_count(o);
        } else if (bounds->parsed()) {
            rep = svcurve::cmd_bounds(o);
            text = svcurve::bounds_table_text(rep);
        } else if (classicality->parsed()) {
            rep = svcurve::cmd_classicality(o);
        } else if (amverify->parsed()) {
            rep = svcurve::cmd_am_verify(o);
            text = svcurve::am_verify_text(rep);
        } else if (cremona->parsed()) {
            rep = svcurve::cmd_cremona(o);
            text = rep.at("output").get<std::string>() + "\n";
        }

        if (o.json_output || text.empty())
            std::cout << rep.dump(2) << "\n";
        else
            std::cout << text;

        if (amverify->parsed() && !rep.at("all_pass").get<bool>()) return 1;
        return 0;
    } catch (const svcurve::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const svcurve::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const svcurve::precondition_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const svcurve::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const svcurve::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
