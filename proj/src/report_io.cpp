#include "adai/report_io.hpp"

#include <fstream>

#include "adai/config.hpp"
#include "adai/csv.hpp"

namespace adai {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool occupied(const fs::path& p) {
    return fs::exists(p) && (!fs::is_directory(p) || !fs::is_empty(p));
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + p.string());
    }
    return out;
}

json loss_to_json(const LossBreakdown& l) {
    return {{"mse_eq", l.mse_eq},     {"mse_bc_d", l.mse_bc_d}, {"mse_bc_n", l.mse_bc_n},
            {"mse_ic_d", l.mse_ic_d}, {"mse_ic_n", l.mse_ic_n}, {"total", l.total}};
}

}  // namespace

fs::path prepare_output_dir(const fs::path& path, OnExists policy) {
    fs::path target = path;
    if (occupied(target)) {
        if (policy == OnExists::Refuse) {
            throw ConfigError("output_dir: '" + path.string() +
                              "' already exists and is not empty (use --on-exists version)");
        }
        for (int n = 2;; ++n) {
            target = fs::path(path.string() + "-v" + std::to_string(n));
            if (!occupied(target)) {
                break;
            }
        }
    }
    fs::create_directories(target);
    return target;
}

std::string config_comment(const TrainConfig& config) {
    return "# config: " + config_to_json(config).dump();
}

void write_loss_csv(std::ostream& out, const TrainReport& report) {
    out << config_comment(report.config_echo) << '\n';
    out << "iteration,mse_eq,mse_bc_d,mse_bc_n,mse_ic_d,mse_ic_n,total\n";
    for (const auto& e : report.loss_history) {
        const auto& l = e.loss;
        out << e.iteration << ',' << format_real(l.mse_eq) << ',' << format_real(l.mse_bc_d)
            << ',' << format_real(l.mse_bc_n) << ',' << format_real(l.mse_ic_d) << ','
            << format_real(l.mse_ic_n) << ',' << format_real(l.total) << '\n';
    }
}

void write_slopes_csv(std::ostream& out, const TrainReport& report) {
    if (!report.a_history) {
        throw std::logic_error("slopes.csv needs an AdaI run");
    }
    out << config_comment(report.config_echo) << '\n';
    out << "iteration";
    for (int m = 1; m <= report.architecture.num_subdomains; ++m) {
        out << ",a_" << m;
    }
    out << '\n';
    for (const auto& e : *report.a_history) {
        out << e.iteration;
        for (double a : e.slopes) {
            out << ',' << format_real(a);
        }
        out << '\n';
    }
}

json report_to_json(const TrainReport& report) {
    json history = json::array();
    for (const auto& e : report.loss_history) {
        json row = loss_to_json(e.loss);
        row["iteration"] = e.iteration;
        history.push_back(row);
    }
    json j = {
        {"config", config_to_json(report.config_echo)},
        {"architecture", architecture_to_json(report.architecture)},
        {"final_rmse", report.final_rmse},
        {"wall_time_seconds", report.wall_time_seconds},
        {"iterations", report.iterations},
        {"early_stop", report.early_stop ? json(*report.early_stop) : json(nullptr)},
        {"loss_history", history},
    };
    if (report.a_history) {
        json slopes = json::array();
        for (const auto& e : *report.a_history) {
            slopes.push_back({{"iteration", e.iteration}, {"a", e.slopes}});
        }
        j["a_history"] = slopes;
    }
    return j;
}

void write_run_outputs(const TrainReport& report, const fs::path& dir) {
    fs::create_directories(dir);
    {
        auto out = open_out(dir / "run.json");
        out << report_to_json(report).dump(2) << '\n';
    }
    {
        auto out = open_out(dir / "loss.csv");
        write_loss_csv(out, report);
    }
    if (report.a_history) {
        auto out = open_out(dir / "slopes.csv");
        write_slopes_csv(out, report);
    }
    {
        json p = params_to_json(report.architecture, report.final_params);
        p["config"] = config_to_json(report.config_echo);
        auto out = open_out(dir / "params.json");
        out << p.dump(2) << '\n';
    }
}

}  // namespace adai
