#include "shiftconv/cli.hpp"

#include "shiftconv/errors.hpp"
#include "shiftconv/forms.hpp"
#include "shiftconv/shifted.hpp"
#include "shiftconv/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace shiftconv {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t max_trunc = 1000000;

enum class Command { forms, scan, verify };

struct RunConfig {
    Command command = Command::verify;
    // forms
    bool delta = false;
    std::optional<int> weight;
    std::size_t trunc = 100;
    // scan
    std::string form = "delta";
    unsigned r_min = 1;
    unsigned r_max = 10;
    std::vector<std::size_t> lengths{1000};
    // verify
    std::optional<std::string> checks;
    bool inject_bug = false;
    // shared
    std::string out_dir;
    int threads = 0;
};

fs::path output_dir(const RunConfig& cfg) {
    fs::path dir;
    if (!cfg.out_dir.empty()) {
        dir = cfg.out_dir;
    } else if (const char* env = std::getenv("SHIFTCONV_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        dir = env;
    } else {
        dir = fs::current_path();
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw config_error("cannot create output directory " + dir.string());
    return dir;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write " + path.string());
    return out;
}

int cmd_forms(const RunConfig& cfg) {
    if (cfg.delta == cfg.weight.has_value()) throw config_error("forms needs exactly one of --delta, --weight");
    if (cfg.trunc < 2 || cfg.trunc > max_trunc) throw config_error("--trunc must lie in [2, 1000000]");
    std::vector<CuspForm> forms;
    if (cfg.delta) {
        forms.push_back(delta_form(cfg.trunc));
    } else {
        const int k = *cfg.weight;
        if (k < 2 || k % 2 != 0) throw config_error("--weight must be an even integer >= 2");
        const int dim = cusp_dimension(k);
        if (dim == 0) {
            std::cout << "weight " << k << ": the space of cusp forms is zero; no files written\n";
            return 0;
        }
        if (dim > 2) {
            throw config_error("weight " + std::to_string(k) + " has cusp dimension " + std::to_string(dim) +
                               "; eigenforms are supported up to dimension 2");
        }
        forms = eigenforms(k, cfg.trunc);
    }
    const fs::path dir = output_dir(cfg);
    for (const auto& f : forms) {
        const fs::path path = dir / (f.id() + ".form");
        std::ofstream out = open_output(path);
        write_form(out, f);
        std::cout << path.string() << '\n';
    }
    return 0;
}

CuspForm load_scan_form(const RunConfig& cfg, std::size_t needed) {
    if (cfg.form == "delta") return delta_form(needed);
    if (cfg.form == "zero") return CuspForm(12, 1, QSeries::zero(needed), "zero");
    std::ifstream in(cfg.form);
    if (!in) throw config_error("cannot open form file " + cfg.form);
    CuspForm f = read_form(in, fs::path(cfg.form).stem().string());
    if (f.trunc_order() < needed) {
        throw config_error("form file truncated at " + std::to_string(f.trunc_order()) + ", scan needs " +
                           std::to_string(needed));
    }
    return f;
}

int cmd_scan(const RunConfig& cfg) {
    if (cfg.r_min < 1 || cfg.r_max < cfg.r_min) throw config_error("need 1 <= --r-min <= --r-max");
    if (cfg.lengths.empty()) throw config_error("--M needs at least one length");
    const std::size_t m_max = *std::max_element(cfg.lengths.begin(), cfg.lengths.end());
    if (m_max < 1 || m_max + cfg.r_max >= max_trunc) throw config_error("--M out of range");
    const CuspForm f = load_scan_form(cfg, m_max + cfg.r_max + 1);
    const std::vector<ScanRow> rows = scan_shifts(f, cfg.r_min, cfg.r_max, cfg.lengths);
    const fs::path path = output_dir(cfg) / "scan.csv";
    std::ofstream out = open_output(path);
    write_scan_csv(out, rows);
    std::cout << path.string() << '\n';
    return 0;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions options;
    if (cfg.checks) options.checks = split_list(*cfg.checks);
    options.inject_bug = cfg.inject_bug;
    const VerifyReport report = run_verify(options);
    const fs::path path = output_dir(cfg) / "verify.json";
    std::ofstream out = open_output(path);
    write_verify_json(out, report);
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " metric=" << c.metric
                  << " tol=" << c.tolerance << '\n';
    }
    std::cout << path.string() << '\n';
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Cusp-form coefficients, shifted products and identity checks"};
    app.require_subcommand(1);

    auto* forms = app.add_subcommand("forms", "Write q-expansions of cusp forms");
    forms->add_flag("--delta", cfg.delta, "The discriminant form");
    forms->add_option("--weight", cfg.weight, "Level-one eigenforms of this weight");
    forms->add_option("--trunc", cfg.trunc, "Truncation order");
    forms->add_option("--threads", cfg.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
    forms->add_option("--out-dir", cfg.out_dir, "Output directory");

    auto* scan = app.add_subcommand("scan", "Nonvanishing statistics of a(n)a(n+r)");
    scan->add_option("--form", cfg.form, "delta, zero, or a form file");
    scan->add_option("--r-min", cfg.r_min, "Smallest shift");
    scan->add_option("--r-max", cfg.r_max, "Largest shift");
    scan->add_option("--M", cfg.lengths, "Prefix lengths")->delimiter(',');
    scan->add_option("--threads", cfg.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
    scan->add_option("--out-dir", cfg.out_dir, "Output directory");

    auto* verify = app.add_subcommand("verify", "Run the identity checks and write a JSON report");
    verify->add_option("--checks", cfg.checks, "Comma-separated check names; empty selects none");
    verify->add_flag("--inject-bug", cfg.inject_bug, "Flip the sign of the unfolding right-hand side");
    verify->add_option("--threads", cfg.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
    verify->add_option("--out-dir", cfg.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

    try {
        if (forms->parsed()) return cmd_forms(cfg);
        if (scan->parsed()) return cmd_scan(cfg);
        return cmd_verify(cfg);
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const truncation_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace shiftconv
