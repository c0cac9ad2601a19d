#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tddm/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tddm: threshold dynamics simulator for dislocations in a slip plane"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    auto* run_cmd = app.add_subcommand("run", "run a scenario from a JSON config");
    run_cmd->add_option("config", config_path, "JSON config file")->required();
    run_cmd->add_option("--override", overrides,
                        "key=value overrides applied after the config file");

    bool desk = false, full = false;
    std::string tables_out = "tables_out";
    auto* tables_cmd =
        app.add_subcommand("tables", "reproduce the straight-edge velocity sweep");
    tables_cmd->add_flag("--desk", desk, "desk-scale sweep at n=1024 (default)");
    tables_cmd->add_flag("--full", full, "full sweep at n=2048");
    tables_cmd->add_option("--out", tables_out, "output directory");

    auto* vk_cmd = app.add_subcommand("validate-kernel", "kernel self-checks");
    (void)vk_cmd;

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            tddm::RunConfig cfg = tddm::load_config(config_path);
            for (const auto& ov : overrides) tddm::apply_override(cfg, ov);
            return tddm::run(cfg);
        }
        if (tables_cmd->parsed()) {
            if (desk && full) {
                std::cerr << "choose one of --desk / --full\n";
                return 2;
            }
            return tddm::reproduce_tables(full, tables_out);
        }
        return tddm::validate_kernel();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
