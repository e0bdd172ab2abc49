#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loracap/capacity.hpp"
#include "loracap/channel.hpp"
#include "loracap/energy.hpp"
#include "loracap/mcsim.hpp"
#include "loracap/oracle.hpp"
#include "loracap/params.hpp"
#include "loracap/report.hpp"
#include "loracap/schemes.hpp"
#include "loracap/verify.hpp"

namespace {

using namespace loracap;

struct CommonOpts {
    std::string scenario_path;
    std::string out_dir = ".";
    std::uint64_t seed = 12345;
    int threads = 1;
    bool theta_linear = false;
    std::string energy_formula = "literal";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--scenario", c.scenario_path, "Scenario JSON file (built-in default if omitted)");
    cmd->add_option("--out", c.out_dir, "Output directory");
    cmd->add_option("--seed", c.seed, "Master RNG seed");
    cmd->add_option("--threads", c.threads, "Worker thread bound")->check(CLI::PositiveNumber);
    cmd->add_flag("--theta-linear", c.theta_linear,
                  "Interpret the SIR threshold as a linear ratio instead of dB");
    cmd->add_option("--energy-formula", c.energy_formula, "literal or charge-balance")
        ->check(CLI::IsMember({"literal", "charge-balance"}));
}

NetworkScenario resolve_scenario(const CommonOpts& c) {
    NetworkScenario s;
    if (!c.scenario_path.empty()) {
        s = load_scenario(c.scenario_path);
    } else {
        s.finalize();
    }
    if (c.theta_linear && !s.theta_is_linear) {
        s.theta_is_linear = true;
        s.finalize();
    }
    return s;
}

SchemeConfig parse_config(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::istringstream in(text.substr(colon + 1));
        std::string tok;
        while (std::getline(in, tok, ',')) args.push_back(std::stoi(tok));
    }
    SchemeConfig cfg;
    if (kind == "DT" && args.empty()) cfg = SchemeConfig::dt();
    else if (kind == "RT" && args.size() == 1) cfg = SchemeConfig::rt(args[0]);
    else if (kind == "CT" && args.size() == 1) cfg = SchemeConfig::ct(args[0]);
    else if (kind == "HT" && args.size() == 3) cfg = SchemeConfig::ht(args[0], args[1], args[2]);
    else throw CLI::ValidationError("--config", "expected DT, RT:m, CT:n or HT:m,n,r; got " + text);
    cfg.validate();
    return cfg;
}

std::string config_string(const SchemeConfig& cfg) {
    std::ostringstream out;
    out << to_string(cfg.kind);
    if (cfg.kind == SchemeKind::RT) out << ":" << cfg.m;
    else if (cfg.kind == SchemeKind::CT) out << ":" << cfg.n;
    else if (cfg.kind == SchemeKind::HT) out << ":" << cfg.m << "," << cfg.n << "," << cfg.r;
    return out.str();
}

RunManifest start_manifest(const std::string& command, const CommonOpts& c) {
    RunManifest m;
    m.command = command;
    m.scenario_path = c.scenario_path;
    m.seed = c.seed;
    m.threads = c.threads;
    m.params.emplace_back("theta_linear", c.theta_linear ? "true" : "false");
    m.params.emplace_back("energy_formula", c.energy_formula);
    return m;
}

void finish_manifest(RunManifest& m, const CommonOpts& c) {
    std::string path = c.out_dir + "/" + m.command + "_manifest.json";
    write_file(path, m.to_json());
    std::cout << "wrote " << path << "\n";
}

void emit(RunManifest& m, const CommonOpts& c, const std::string& name,
          const std::string& content) {
    std::string path = c.out_dir + "/" + name;
    write_file(path, content);
    m.outputs.push_back(name);
    std::cout << "wrote " << path << "\n";
}

// Default scheme grid at a copy budget: DT, RT(M), CT(M-1) and every HT
// split of the same budget.
std::vector<SchemeConfig> budget_grid(int budget) {
    std::vector<SchemeConfig> grid;
    grid.push_back(SchemeConfig::dt());
    grid.push_back(SchemeConfig::rt(budget));
    if (budget >= 2) grid.push_back(SchemeConfig::ct(budget - 1));
    for (int m = 1; m < budget; ++m)
        for (int n = 1; n <= budget - m; ++n)
            if ((budget - m) % n == 0) {
                SchemeConfig ht = SchemeConfig::ht(m, n, (budget - m) / n);
                if ((ht.m == 1 && ht.r == 1) || ht.n == 0) continue;  // covered above
                grid.push_back(ht);
            }
    return grid;
}

int cmd_outage(const CommonOpts& c, int sf, int budget,
               const std::vector<std::string>& config_texts, int o_steps,
               const std::vector<double>& nbar_sweep) {
    NetworkScenario scenario = resolve_scenario(c);
    std::vector<SchemeConfig> grid;
    for (const auto& t : config_texts) grid.push_back(parse_config(t));
    if (grid.empty()) grid = budget_grid(budget);

    RunManifest manifest = start_manifest("outage", c);
    manifest.params.emplace_back("sf", std::to_string(sf));
    manifest.params.emplace_back("budget", std::to_string(budget));
    manifest.params.emplace_back("o_steps", std::to_string(o_steps));
    for (const auto& cfg : grid) manifest.params.emplace_back("config", config_string(cfg));

    CsvWriter csv({"nbar", "scheme", "m", "n", "r", "M", "link_outage", "final_outage"});
    auto add = [&](double nbar, const SchemeConfig& cfg, double o) {
        SchemeOutage so = scheme_outage(cfg, o);
        csv.add_row({nbar < 0 ? "" : format_number(nbar), to_string(cfg.kind),
                     std::to_string(cfg.m), std::to_string(cfg.n), std::to_string(cfg.r),
                     std::to_string(cfg.copies()), format_number(o),
                     format_number(so.final_outage)});
    };
    if (!nbar_sweep.empty()) {
        for (double nbar : nbar_sweep) {
            NetworkScenario sc = scenario;
            sc.set_mean_nodes(sf, nbar);
            for (const auto& cfg : grid) {
                manifest.params.emplace_back("nbar", format_number(nbar));
                OutageBreakdown b = link_outage(sc, sf, sc.radius_m, cfg.copies());
                add(nbar, cfg, b.link_outage);
            }
        }
    } else {
        for (int i = 0; i < o_steps; ++i) {
            double o = o_steps == 1 ? 0.0 : static_cast<double>(i) / (o_steps - 1);
            for (const auto& cfg : grid) add(-1.0, cfg, o);
        }
    }
    emit(manifest, c, "outage.csv", csv.str());
    finish_manifest(manifest, c);
    return 0;
}

int cmd_capacity(const CommonOpts& c, const std::vector<double>& targets,
                 const std::vector<std::string>& kinds, int m_cap) {
    NetworkScenario scenario = resolve_scenario(c);
    RunManifest manifest = start_manifest("capacity", c);
    manifest.params.emplace_back("m_cap", std::to_string(m_cap));
    for (double t : targets) manifest.params.emplace_back("target", format_number(t));
    for (const auto& k : kinds) manifest.params.emplace_back("kind", k);

    CsvWriter csv({"sf", "kind", "target", "m", "n", "r", "M", "required_link_outage",
                   "n_devices", "reachable", "near_tie"});
    auto add = [&](const std::string& sf_label, const std::string& kind,
                   const CapacityResult& res, bool near_tie) {
        csv.add_row({sf_label, kind, format_number(res.target), std::to_string(res.config.m),
                     std::to_string(res.config.n), std::to_string(res.config.r),
                     std::to_string(res.config.copies()),
                     format_number(res.required_link_outage), format_number(res.n_devices),
                     res.reachable ? "1" : "0", near_tie ? "1" : "0"});
    };

    for (double target : targets) {
        for (const auto& kind : kinds) {
            double cross_sf_sum = 0.0;
            for (int sf = kSfMin; sf <= kSfMax; ++sf) {
                if (kind == "DT") {
                    CapacityResult res = max_devices(scenario, sf, SchemeConfig::dt(), target);
                    cross_sf_sum += res.n_devices;
                    add(std::to_string(sf), kind, res, false);
                    continue;
                }
                OptimizeKind ok = kind == "RT"    ? OptimizeKind::RT
                                  : kind == "CT"  ? OptimizeKind::CT
                                  : kind == "HT"  ? OptimizeKind::HT
                                  : kind == "HT*" ? OptimizeKind::HTStar
                                                  : throw CLI::ValidationError(
                                                        "--kinds", "unknown kind " + kind);
                OptimizeResult res = optimize(scenario, sf, target, ok, m_cap);
                cross_sf_sum += res.best.n_devices;
                add(std::to_string(sf), kind, res.best, false);
                for (const auto& tie : res.near_ties) add(std::to_string(sf), kind, tie, true);
            }
            // Per-SF sum; the per-SF density split behind an aggregate
            // figure is an interpretation, flagged by the "all" label.
            CapacityResult sum_row;
            sum_row.target = target;
            sum_row.n_devices = cross_sf_sum;
            add("all", kind, sum_row, false);
        }
    }
    emit(manifest, c, "capacity.csv", csv.str());
    finish_manifest(manifest, c);
    return 0;
}

int cmd_energy(const CommonOpts& c, const std::vector<int>& sfs, int m_max) {
    NetworkScenario scenario = resolve_scenario(c);
    RunManifest manifest = start_manifest("energy", c);
    manifest.params.emplace_back("m_max", std::to_string(m_max));
    for (int sf : sfs) manifest.params.emplace_back("sf", std::to_string(sf));

    CsvWriter csv({"sf", "M", "mode", "formula", "avg_current_mA", "sleep_s", "lifetime_h",
                   "lifetime_days", "feasible"});
    for (int sf : sfs) {
        const SfParams& sp = sf_params_for(sf);
        EnergyStateTable table = default_energy_table(sp);
        int cap = std::min(m_max, max_copies(scenario, sf, m_max));
        for (int m = 1; m <= cap; ++m) {
            for (EnergyMode mode : {EnergyMode::Default, EnergyMode::Modified}) {
                for (EnergyFormula formula :
                     {EnergyFormula::Literal, EnergyFormula::ChargeBalance}) {
                    try {
                        EnergyReport rep =
                            mode == EnergyMode::Default
                                ? avg_current_default(sp, table, m, scenario.period_s, formula)
                                : avg_current_modified(sp, table, m, scenario.period_s, formula);
                        double hours = lifetime_h(rep, scenario.battery_mah);
                        csv.add_row({std::to_string(sf), std::to_string(m), to_string(mode),
                                     to_string(formula), format_number(rep.avg_current_a * 1e3),
                                     format_number(rep.sleep_time_s), format_number(hours),
                                     format_number(hours / 24.0), "1"});
                    } catch (const std::domain_error&) {
                        csv.add_row({std::to_string(sf), std::to_string(m), to_string(mode),
                                     to_string(formula), "", "", "", "", "0"});
                    }
                }
            }
        }
    }
    emit(manifest, c, "energy.csv", csv.str());
    finish_manifest(manifest, c);
    return 0;
}

int cmd_simulate(const CommonOpts& c, int sf, double d1_frac, double nbar, int copies,
                 std::uint64_t trials) {
    NetworkScenario scenario = resolve_scenario(c);
    scenario.set_mean_nodes(sf, nbar);
    TrialConfig cfg{scenario, sf, d1_frac * scenario.radius_m, copies, trials, c.seed,
                    c.threads};

    RunManifest manifest = start_manifest("simulate", c);
    manifest.params.emplace_back("sf", std::to_string(sf));
    manifest.params.emplace_back("d1_frac", format_number(d1_frac));
    manifest.params.emplace_back("nbar", format_number(nbar));
    manifest.params.emplace_back("copies", std::to_string(copies));
    manifest.params.emplace_back("trials", std::to_string(trials));

    McEstimate conn = simulate_connection(cfg);
    McEstimate capt = simulate_capture(cfg);
    McEstimate link = simulate_link_outage(cfg);
    OutageBreakdown analytic = link_outage(scenario, sf, cfg.d1_m, copies);

    std::ostringstream json;
    auto point = [&](const char* name, const McEstimate& e, double reference) {
        json << "  \"" << name << "\": {\"estimate\": " << format_number(e.value)
             << ", \"stderr\": " << format_number(e.std_error)
             << ", \"analytic\": " << format_number(reference)
             << ", \"trials\": " << e.trials << ", \"seed\": " << c.seed << "}";
    };
    json << "{\n";
    point("connection", conn, analytic.h1);
    json << ",\n";
    point("capture", capt, analytic.q1);
    json << ",\n";
    point("link_outage", link, analytic.link_outage);
    json << "\n}\n";

    emit(manifest, c, "simulate.json", json.str());
    finish_manifest(manifest, c);
    return 0;
}

int cmd_verify(const CommonOpts& c, bool deep) {
    RunManifest manifest = start_manifest("verify", c);
    manifest.params.emplace_back("deep", deep ? "true" : "false");
    verify::Report report = verify::run_verify(deep, c.seed, c.threads);
    for (const auto& check : report.checks)
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail
                  << ")\n";
    emit(manifest, c, "verify.json", report.to_json());
    finish_manifest(manifest, c);
    if (!report.all_passed()) {
        for (const auto& check : report.checks)
            if (!check.passed) {
                std::cerr << "first failing invariant: " << check.name << "\n";
                return 1;
            }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytical outage, capacity and battery-lifetime calculator for "
                 "LoRaWAN message-replication schemes"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* outage = app.add_subcommand("outage", "Final vs link outage for scheme grids");
    int sf = 7, budget = 4, o_steps = 101;
    std::vector<std::string> configs;
    std::vector<double> nbar_sweep;
    add_common(outage, common);
    outage->add_option("--sf", sf)->check(CLI::Range(kSfMin, kSfMax));
    outage->add_option("--budget", budget, "Copy budget for the default scheme grid")
        ->check(CLI::PositiveNumber);
    outage->add_option("--config", configs, "Explicit scheme (DT, RT:m, CT:n, HT:m,n,r)");
    outage->add_option("--o-steps", o_steps, "Points on the [0,1] link-outage grid")
        ->check(CLI::PositiveNumber);
    outage->add_option("--nbar", nbar_sweep, "Density sweep: mean node counts instead of an O_M grid");

    auto* capacity = app.add_subcommand("capacity", "Optimal configurations and device counts");
    std::vector<double> targets{0.99, 0.999};
    std::vector<std::string> kinds{"DT", "RT", "CT", "HT", "HT*"};
    int m_cap = 10;
    add_common(capacity, common);
    capacity->add_option("--targets", targets)->check(CLI::Range(0.0, 1.0));
    capacity->add_option("--kinds", kinds);
    capacity->add_option("--m-cap", m_cap)->check(CLI::PositiveNumber);

    auto* energy = app.add_subcommand("energy", "Battery lifetime vs copy count");
    std::vector<int> sfs{7, 12};
    int m_max = 10;
    add_common(energy, common);
    energy->add_option("--sfs", sfs)->check(CLI::Range(kSfMin, kSfMax));
    energy->add_option("--m-max", m_max)->check(CLI::PositiveNumber);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo channel validation");
    int sim_sf = 7, sim_copies = 1;
    double d1_frac = 1.0, nbar = 100.0;
    std::uint64_t trials = 1000000;
    add_common(simulate, common);
    simulate->add_option("--sf", sim_sf)->check(CLI::Range(kSfMin, kSfMax));
    simulate->add_option("--d1-frac", d1_frac, "Node distance as a fraction of the radius")
        ->check(CLI::Range(1e-9, 1.0));
    simulate->add_option("--nbar", nbar, "Mean node count on the SF")->check(CLI::NonNegativeNumber);
    simulate->add_option("--copies", sim_copies)->check(CLI::PositiveNumber);
    simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    bool deep = false;
    add_common(verify_cmd, common);
    verify_cmd->add_flag("--deep", deep, "Acceptance-sized grids and trial counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (outage->parsed()) return cmd_outage(common, sf, budget, configs, o_steps, nbar_sweep);
        if (capacity->parsed()) return cmd_capacity(common, targets, kinds, m_cap);
        if (energy->parsed()) return cmd_energy(common, sfs, m_max);
        if (simulate->parsed())
            return cmd_simulate(common, sim_sf, d1_frac, nbar, sim_copies, trials);
        if (verify_cmd->parsed()) return cmd_verify(common, deep);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
