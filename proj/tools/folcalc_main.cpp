#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folcalc/scene.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw folcalc::Error("cannot open scene file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_scene_errors(const folcalc::SceneParseError& e) {
    for (const auto& err : e.errors)
        std::cerr << "error: line " << err.line << ": " << err.message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"folcalc: symbolic foliation calculus and numerical triviality lab"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string out_path;
    bool parallel = false;
    long long budget_steps = folcalc::default_budget().max_steps;

    CLI::App* run = app.add_subcommand("run", "run all tasks in a scene file");
    run->add_option("scene", scene_path, "scene file")->required();
    run->add_option("--out", out_path, "write the JSON report to this file");
    run->add_flag("--parallel", parallel, "run independent tasks concurrently");
    run->add_option("--budget", budget_steps, "symbolic step budget")
        ->envname("FOLCALC_BUDGET");

    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "parse and validate a scene file");
    check->add_option("scene", check_path, "scene file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            folcalc::SceneDoc doc;
            try {
                doc = folcalc::parse_scene(read_file(scene_path));
            } catch (const folcalc::SceneParseError& e) {
                print_scene_errors(e);
                return 1;
            }
            folcalc::Budget budget;
            budget.max_steps = budget_steps;
            std::vector<folcalc::Report> reports =
                folcalc::run_all_tasks(doc, budget, parallel);
            for (const auto& r : reports)
                std::cerr << "task " << r.id << ": " << r.status << " (" << r.elapsed_ms
                          << " ms)\n";
            std::string json = folcalc::emit_report(reports);
            if (out_path.empty()) {
                std::cout << json << "\n";
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw folcalc::Error("cannot write '" + out_path + "'");
                out << json;
            }
            for (const auto& r : reports)
                if (r.status != "ok") return 2;
            return 0;
        }
        if (check->parsed()) {
            try {
                folcalc::parse_scene(read_file(check_path));
            } catch (const folcalc::SceneParseError& e) {
                print_scene_errors(e);
                return 1;
            }
            std::cout << "ok\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
