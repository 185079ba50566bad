#include "adai/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "adai/config.hpp"
#include "adai/csv.hpp"
#include "adai/report_io.hpp"

namespace adai {

namespace fs = std::filesystem;
using nlohmann::json;

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of an empty list");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

struct CommonOptions {
    std::string config_file;
    std::string problem;
    std::string mode;
    std::string activation;
    std::vector<std::string> activations;
    std::optional<int> iterations;
    std::optional<std::uint64_t> seed;
    std::string output_dir;
    std::vector<std::string> sets;
    std::string on_exists = "refuse";
    bool quiet = false;
};

void add_common(CLI::App* app, CommonOptions& o, bool with_output = true) {
    app->add_option("-c,--config", o.config_file, "JSON config file");
    app->add_option("--problem", o.problem, "poisson1d, letters2d or spheres3d");
    app->add_option("--mode", o.mode, "adai or ipinn");
    app->add_option("--activation", o.activation, "activation kind in adai mode");
    app->add_option("--activations", o.activations, "per-subdomain kinds in ipinn mode")
        ->delimiter(',');
    app->add_option("--iterations", o.iterations, "optimizer steps");
    app->add_option("--seed", o.seed, "seed for initialization and sampling");
    app->add_option("--set", o.sets, "dotted override key=value (repeatable)");
    if (with_output) {
        app->add_option("-o,--output-dir", o.output_dir, "directory for the run files");
        app->add_option("--on-exists", o.on_exists, "existing output dir: refuse or version")
            ->check(CLI::IsMember({"refuse", "version"}));
        app->add_flag("-q,--quiet", o.quiet, "no progress lines");
    }
}

std::string quoted(const std::string& key, const json& value) {
    return key + "=" + value.dump();
}

json load_file(const CommonOptions& o) {
    return o.config_file.empty() ? json(nullptr) : read_json_file(o.config_file);
}

std::vector<std::string> collect_overrides(const CommonOptions& o) {
    std::vector<std::string> out;
    if (!o.problem.empty()) out.push_back(quoted("problem", o.problem));
    if (!o.mode.empty()) out.push_back(quoted("mode", o.mode));
    if (!o.activation.empty()) out.push_back(quoted("activation", o.activation));
    if (!o.activations.empty()) out.push_back(quoted("activations", o.activations));
    if (o.iterations) out.push_back(quoted("iterations", *o.iterations));
    if (o.seed) out.push_back(quoted("seed", *o.seed));
    if (!o.output_dir.empty()) out.push_back(quoted("output_dir", o.output_dir));
    out.insert(out.end(), o.sets.begin(), o.sets.end());
    return out;
}

TrainConfig finish(const json& merged) {
    TrainConfig c = config_from_json(merged);
    validate_config(c, subdomain_count(c.problem));
    return c;
}

OnExists policy_of(const CommonOptions& o) {
    return o.on_exists == "version" ? OnExists::Version : OnExists::Refuse;
}

ProgressCallback progress_printer(const TrainConfig& c, const std::string& label, bool quiet,
                                  std::ostream& err) {
    if (quiet) {
        return {};
    }
    const int stride = c.log_interval * 10;
    return [&err, label, stride, total = c.iterations](int it, const LossBreakdown& l) {
        if (it % stride == 0 || it == total) {
            err << label << "iter " << it << "  loss " << format_real(l.total) << '\n';
        }
    };
}

int report_outcome(const TrainReport& r, const fs::path& dir, std::ostream& out,
                   std::ostream& err) {
    out << "final_rmse " << format_real(r.final_rmse) << '\n'
        << "wall_time_seconds " << format_real(r.wall_time_seconds) << '\n'
        << "output_dir " << dir.string() << '\n';
    if (r.early_stop) {
        err << "training stopped early at " << *r.early_stop << '\n';
        return 1;
    }
    return 0;
}

int cmd_run(const CommonOptions& o, std::ostream& out, std::ostream& err) {
    const TrainConfig c = finish(resolve_config_json(load_file(o), collect_overrides(o)));
    const fs::path dir = prepare_output_dir(c.output_dir, policy_of(o));
    const TrainReport r = train(c, progress_printer(c, "", o.quiet, err));
    write_run_outputs(r, dir);
    return report_outcome(r, dir, out, err);
}

struct CompareRow {
    std::string method;
    std::uint64_t seed;
    TrainReport report;
};

int cmd_compare(const CommonOptions& o, const std::vector<std::uint64_t>& cli_seeds,
                std::ostream& out, std::ostream& err) {
    json file = load_file(o);
    std::vector<std::uint64_t> seeds;
    json methods = json::array({{{"name", "adai"}, {"mode", "adai"}},
                                {{"name", "ipinn"}, {"mode", "ipinn"}}});
    if (file.is_object()) {
        if (file.contains("seeds")) {
            try {
                seeds = file["seeds"].get<std::vector<std::uint64_t>>();
            } catch (const json::exception&) {
                throw ConfigError("seeds: expected a list of non-negative integers");
            }
            file.erase("seeds");
        }
        if (file.contains("methods")) {
            methods = file["methods"];
            file.erase("methods");
        }
    }
    if (!cli_seeds.empty()) {
        seeds = cli_seeds;
    }
    if (!methods.is_array() || methods.empty()) {
        throw ConfigError("methods: expected a non-empty list of objects");
    }

    const json base = resolve_config_json(file, collect_overrides(o));
    if (seeds.empty()) {
        seeds.push_back(finish(base).seed);
    }
    std::vector<std::pair<std::string, json>> resolved;
    for (std::size_t i = 0; i < methods.size(); ++i) {
        json patch = methods[i];
        if (!patch.is_object()) {
            throw ConfigError("methods[" + std::to_string(i) + "]: expected an object");
        }
        const std::string name = patch.value("name", "method" + std::to_string(i + 1));
        patch.erase("name");
        json merged = base;
        merged.merge_patch(patch);
        finish(merged);
        resolved.emplace_back(name, merged);
    }

    const TrainConfig base_config = finish(base);
    const fs::path dir = prepare_output_dir(base_config.output_dir, policy_of(o));
    std::vector<CompareRow> rows;
    for (auto seed : seeds) {
        for (const auto& [name, merged] : resolved) {
            TrainConfig c = finish(merged);
            c.seed = seed;
            const std::string label = name + " seed " + std::to_string(seed) + ": ";
            TrainReport r = train(c, progress_printer(c, label, o.quiet, err));
            write_run_outputs(r, dir / (name + "-seed" + std::to_string(seed)));
            if (r.early_stop) {
                err << label << "stopped early at " << *r.early_stop << '\n';
                return 1;
            }
            rows.push_back({name, seed, std::move(r)});
        }
    }

    json echo = {{"base", base}, {"seeds", seeds}, {"methods", methods}};
    std::ofstream csv(dir / "compare.csv", std::ios::binary);
    csv << "# config: " << echo.dump() << '\n';
    csv << "method,seed,iterations,rmse,wall_time_seconds,cost\n";
    const std::size_t per_seed = resolved.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        const double t_ref = rows[k - k % per_seed].report.wall_time_seconds;
        csv << row.method << ',' << row.seed << ',' << row.report.iterations << ','
            << format_real(row.report.final_rmse) << ','
            << format_real(row.report.wall_time_seconds) << ','
            << format_real(cost_ratio(row.report.wall_time_seconds, t_ref)) << '\n';
    }
    double t_first = 0.0;
    out << "method  iterations  median_rmse  cost\n";
    for (std::size_t m = 0; m < per_seed; ++m) {
        std::vector<double> rmse;
        std::vector<double> times;
        for (std::size_t k = m; k < rows.size(); k += per_seed) {
            rmse.push_back(rows[k].report.final_rmse);
            times.push_back(rows[k].report.wall_time_seconds);
        }
        const double t = median(times);
        if (m == 0) {
            t_first = t;
        }
        const auto& first = rows[m];
        const double cost = cost_ratio(t, t_first);
        csv << first.method << ",median," << first.report.iterations << ','
            << format_real(median(rmse)) << ',' << format_real(t) << ',' << format_real(cost)
            << '\n';
        out << first.method << "  " << first.report.iterations << "  "
            << format_real(median(rmse)) << "  " << format_real(cost) << '\n';
    }
    out << "output_dir " << dir.string() << '\n';
    return 0;
}

int cmd_sweep(const CommonOptions& o, std::ostream& out, std::ostream& err) {
    const TrainConfig base = finish(resolve_config_json(load_file(o), collect_overrides(o)));
    if (base.mode != "adai") {
        throw ConfigError("mode: sweep-activations needs mode adai");
    }
    const fs::path dir = prepare_output_dir(base.output_dir, policy_of(o));
    std::vector<TrainReport> reports;
    for (auto kind : kAllActivations) {
        TrainConfig c = base;
        c.activation = kind;
        const std::string name(to_string(kind));
        TrainReport r = train(c, progress_printer(c, name + ": ", o.quiet, err));
        write_run_outputs(r, dir / name);
        if (r.early_stop) {
            err << name << ": stopped early at " << *r.early_stop << '\n';
            return 1;
        }
        reports.push_back(std::move(r));
    }

    std::ofstream csv(dir / "sweep.csv", std::ios::binary);
    csv << config_comment(base) << '\n';
    csv << "kind";
    for (int m = 1; m <= reports.front().architecture.num_subdomains; ++m) {
        csv << ",a_" << m;
    }
    csv << ",rmse,cost\n";
    const double t_first = reports.front().wall_time_seconds;
    for (const auto& r : reports) {
        const std::string name(to_string(r.config_echo.activation));
        csv << name;
        out << name;
        for (double a : r.a_history->back().slopes) {
            csv << ',' << format_real(a);
            out << "  " << format_real(a);
        }
        const double cost = cost_ratio(r.wall_time_seconds, t_first);
        csv << ',' << format_real(r.final_rmse) << ',' << format_real(cost) << '\n';
        out << "  rmse " << format_real(r.final_rmse) << "  cost " << format_real(cost) << '\n';
    }
    out << "output_dir " << dir.string() << '\n';
    return 0;
}

json geometry_json(const std::string& problem, const std::string& layout_file) {
    json j = json::object();
    if (problem.empty() || problem == "poisson1d") {
        const auto p = problem_1d();
        j["poisson1d"] = {{"domain", {0.0, 1.0}},
                          {"interfaces", {0.2, 0.4, 0.6, 0.8}},
                          {"kappa", p.kappa}};
    }
    if (problem.empty() || problem == "letters2d") {
        const auto layout = read_layout_file(layout_file);
        const auto p = problem_2d_letters(layout);
        j["letters2d"] = {{"domain", {{0.0, 0.0}, {1.7, 1.0}}},
                          {"layout", layout_to_json(layout)},
                          {"kappa", p.kappa}};
    }
    if (problem.empty() || problem == "spheres3d") {
        const auto p = problem_3d_spheres();
        json spheres = json::array();
        for (const auto& s : benchmark_spheres()) {
            spheres.push_back({{"center", s.center}, {"radius", s.radius}});
        }
        j["spheres3d"] = {{"domain", {{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}}},
                          {"spheres", spheres},
                          {"kappa", p.kappa}};
    }
    if (j.empty()) {
        subdomain_count(problem);  // throws with the list of valid names
    }
    return j;
}

int cmd_dump_batch(const CommonOptions& o, const std::string& output, std::ostream& out) {
    const TrainConfig c = finish(resolve_config_json(load_file(o), collect_overrides(o)));
    const ProblemSpec problem = make_problem(c.problem, read_layout_file(c.layout_file));
    const Batch batch = build_batch(problem, c.sampling, c.seed);
    if (output.empty() || output == "-") {
        write_batch_csv(out, batch);
        return 0;
    }
    if (fs::exists(output)) {
        throw ConfigError("output: '" + output + "' already exists");
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write " + output);
    }
    write_batch_csv(file, batch);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interface PINNs with adaptive activation slopes"};
    app.name("adai");
    app.require_subcommand(1);

    CommonOptions run_opts;
    auto* run = app.add_subcommand("run", "train one model and write its report files");
    add_common(run, run_opts);

    CommonOptions cmp_opts;
    std::vector<std::uint64_t> seeds;
    auto* cmp = app.add_subcommand("compare", "train each method for every seed");
    add_common(cmp, cmp_opts);
    cmp->add_option("--seeds", seeds, "seed list, e.g. 1,2,3")->delimiter(',');

    CommonOptions sweep_opts;
    auto* sweep =
        app.add_subcommand("sweep-activations", "train adai once per activation kind");
    add_common(sweep, sweep_opts);

    std::string geo_problem;
    std::string geo_layout;
    auto* geo = app.add_subcommand("print-geometry", "print interfaces, letters and spheres");
    geo->add_option("--problem", geo_problem, "limit output to one benchmark");
    geo->add_option("--layout", geo_layout, "letter layout JSON");

    CommonOptions dump_opts;
    std::string dump_output;
    auto* dump = app.add_subcommand("dump-batch", "write the collocation points as CSV");
    add_common(dump, dump_opts, false);
    dump->add_option("--output", dump_output, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) return cmd_run(run_opts, out, err);
        if (*cmp) return cmd_compare(cmp_opts, seeds, out, err);
        if (*sweep) return cmd_sweep(sweep_opts, out, err);
        if (*geo) {
            out << geometry_json(geo_problem, geo_layout).dump(2) << '\n';
            return 0;
        }
        if (*dump) return cmd_dump_batch(dump_opts, dump_output, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error in " << e.term() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace adai
