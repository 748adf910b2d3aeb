#include "floquet/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "floquet/calibration.hpp"
#include "floquet/dense.hpp"

namespace floquet {

namespace {

std::vector<Detector> build_detectors(const std::string& code,
                                      const Layout& layout, int rounds,
                                      bool reset) {
    if (code == "honeycomb")
        return honeycomb_detectors(layout, honeycomb_schedule(rounds), reset);
    if (code == "color")
        return color_code_detectors(layout, color_code_schedule(rounds),
                                    reset);
    throw std::invalid_argument("unknown code: " + code);
}

std::vector<RoundSpec> build_schedule(const std::string& code, int rounds) {
    if (code == "honeycomb") return honeycomb_schedule(rounds);
    if (code == "color") return color_code_schedule(rounds);
    throw std::invalid_argument("unknown code: " + code);
}

std::vector<double> parse_p_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stod(item));
    }
    return values;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
}

}  // namespace

Layout layout_from_spec(const std::string& spec) {
    std::string body;
    if (spec.rfind("patch:", 0) == 0)
        body = spec.substr(6);
    else if (spec.rfind("patch", 0) == 0)
        body = spec.substr(5);
    else
        return build_layout(spec);
    const auto x = body.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("patch spec must look like patch:RxC");
    return build_patch(std::stoi(body.substr(0, x)),
                       std::stoi(body.substr(x + 1)));
}

DetectionReport run_experiment(const ExperimentConfig& config) {
    const Layout layout = layout_from_spec(config.layout);
    const int rounds =
        config.rounds > 0 ? config.rounds : default_rounds(config.code);
    const auto schedule = build_schedule(config.code, rounds);
    const auto detectors =
        build_detectors(config.code, layout, rounds, config.reset);
    const Circuit circuit = schedule_rounds(layout, schedule, config.reset);
    const NoiseModel model =
        config.uniform_noise ? NoiseModel::uniform(config.p) : config.model;
    const Circuit noisy = apply_noise(circuit, model);
    const ShotTable table =
        run_shots(noisy, config.shots, config.seed, config.threads);

    if (!config.dump_shots.empty()) table.save_binary(config.dump_shots);

    RunMeta meta;
    meta.code = config.code;
    meta.layout = layout.name;
    meta.rounds = rounds;
    meta.reset = config.reset;
    meta.uniform_noise = config.uniform_noise;
    meta.p = config.p;
    meta.model = model;
    meta.seed = config.seed;
    return detection_rates(table, detectors, std::move(meta));
}

namespace {

void add_common_options(CLI::App* cmd, ExperimentConfig& config,
                        bool* no_reset) {
    cmd->add_option("--code", config.code, "honeycomb or color")
        ->check(CLI::IsMember({"honeycomb", "color"}));
    cmd->add_option("--layout", config.layout,
                    "falcon27, hummingbird65, eagle127 or patch:RxC");
    cmd->add_option("--rounds", config.rounds,
                    "schedule length (default 7 honeycomb / 10 color)");
    cmd->add_flag("--no-reset", *no_reset,
                  "do not reset auxiliaries between measurements");
    cmd->add_option("--shots", config.shots, "Monte-Carlo shots");
    cmd->add_option("--seed", config.seed, "base seed (default documented)");
    cmd->add_option("--threads", config.threads,
                    "worker threads (0 = FLOQUET_THREADS or hardware)");
}

void add_noise_options(CLI::App* cmd, ExperimentConfig& config) {
    auto* p = cmd->add_option("--p", config.p, "uniform noise strength");
    auto* pp = cmd->add_option("--p-prep", config.model.p_prep);
    auto* pm = cmd->add_option("--p-meas", config.model.p_meas);
    auto* pc = cmd->add_option("--p-cx", config.model.p_cx);
    auto* pi = cmd->add_option("--p-idle", config.model.p_idle);
    cmd->callback([&config, p, pp, pm, pc, pi]() {
        const bool per_category = pp->count() || pm->count() || pc->count() ||
                                  pi->count();
        if (per_category && p->count())
            throw CLI::ValidationError(
                "--p conflicts with the per-category noise flags");
        config.uniform_noise = !per_category;
    });
}

int cmd_run(const ExperimentConfig& config, std::ostream& out) {
    const DetectionReport report = run_experiment(config);
    char line[256];
    std::snprintf(line, sizeof(line),
                  "code=%s layout=%s rounds=%d reset=%d shots=%lld seed=%llu "
                  "mean=%.6f min=%.6f max=%.6f",
                  report.meta.code.c_str(), report.meta.layout.c_str(),
                  report.meta.rounds, report.meta.reset ? 1 : 0,
                  static_cast<long long>(report.meta.shots),
                  static_cast<unsigned long long>(report.meta.seed),
                  report.mean, report.min, report.max);
    out << line << "\n";

    std::ostringstream body;
    if (config.json)
        body << report_to_json(report) << "\n";
    else
        write_report_csv(body, report);
    if (config.out_path.empty())
        out << body.str();
    else
        write_file(config.out_path, body.str());
    return 0;
}

int cmd_sweep(const ExperimentConfig& config, const std::vector<double>& ps,
              std::ostream& out) {
    const Layout layout = layout_from_spec(config.layout);
    const auto reports =
        sweep(config.code, layout, ps, config.shots, config.seed,
              config.reset, config.rounds, config.threads);
    std::ostringstream body;
    if (config.json)
        body << sweep_to_json(reports) << "\n";
    else
        write_sweep_csv(body, reports);
    if (config.out_path.empty())
        out << body.str();
    else
        write_file(config.out_path, body.str());
    return 0;
}

int cmd_detectors(const ExperimentConfig& config, std::ostream& out) {
    const Layout layout = layout_from_spec(config.layout);
    const int rounds =
        config.rounds > 0 ? config.rounds : default_rounds(config.code);
    const auto detectors =
        build_detectors(config.code, layout, rounds, config.reset);
    for (const auto& det : detectors) {
        out << "D" << det.id << " plaquette=" << det.plaquette
            << " basis=" << to_string(det.basis) << " records=";
        for (size_t i = 0; i < det.records.size(); ++i) {
            if (i) out << ",";
            out << det.records[i];
        }
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Floquet-code measurement circuits on heavy-hex lattices"};
    app.require_subcommand(1);

    ExperimentConfig config;
    bool no_reset = false;

    auto* run = app.add_subcommand("run", "simulate one configuration");
    add_common_options(run, config, &no_reset);
    add_noise_options(run, config);
    run->add_option("--out", config.out_path, "report file (default stdout)");
    run->add_flag("--json", config.json, "JSON instead of CSV");
    run->add_option("--dump-shots", config.dump_shots,
                    "write the raw shot table (binary)");

    std::string p_list_text;
    std::string config_path;
    auto* sw = app.add_subcommand("sweep", "detection rate vs noise strength");
    add_common_options(sw, config, &no_reset);
    sw->add_option("--p-list", p_list_text, "comma-separated p values");
    sw->add_option("--config", config_path,
                   "JSON config file (flags override)");
    sw->add_option("--out", config.out_path, "report file (default stdout)");
    sw->add_flag("--json", config.json, "JSON instead of CSV");

    auto* det = app.add_subcommand("detectors", "print detector record sets");
    add_common_options(det, config, &no_reset);

    std::string layout_name = "falcon27";
    std::string export_path;
    bool do_validate = false;
    auto* lay = app.add_subcommand("layout", "export or validate layouts");
    lay->add_option("--name", layout_name, "device name or patch:RxC");
    lay->add_option("--export", export_path, "write layout JSON here");
    lay->add_flag("--validate", do_validate, "run the coloring validator");

    auto* calib = app.add_subcommand("calib", "calibration snapshot tools");
    std::string calib_file;
    auto* summarize =
        calib->add_subcommand("summarize", "print device,<p>,sigma");
    summarize->add_option("file", calib_file, "snapshot JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code;
    }

    config.reset = !no_reset;

    try {
        if (run->parsed()) return cmd_run(config, out);
        if (sw->parsed()) {
            std::vector<double> ps;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in)
                    throw std::runtime_error("cannot open " + config_path);
                nlohmann::json j;
                in >> j;
                auto maybe = [&](const char* key, auto& slot) {
                    using T = std::decay_t<decltype(slot)>;
                    if (j.contains(key)) slot = j[key].template get<T>();
                };
                // Flags given on the command line take precedence.
                if (!sw->count("--code")) maybe("code", config.code);
                if (!sw->count("--layout")) maybe("layout", config.layout);
                if (!sw->count("--rounds")) maybe("rounds", config.rounds);
                if (!sw->count("--shots")) maybe("shots", config.shots);
                if (!sw->count("--seed")) maybe("seed", config.seed);
                if (!sw->count("--threads")) maybe("threads", config.threads);
                if (!sw->count("--no-reset") && j.contains("reset"))
                    config.reset = j["reset"].get<bool>();
                if (!sw->count("--p-list") && j.contains("p_list"))
                    ps = j["p_list"].get<std::vector<double>>();
            }
            if (!p_list_text.empty()) ps = parse_p_list(p_list_text);
            if (ps.empty()) {
                err << "sweep: empty p list (use --p-list or --config)\n";
                return 1;
            }
            return cmd_sweep(config, ps, out);
        }
        if (det->parsed()) return cmd_detectors(config, out);
        if (lay->parsed()) {
            const Layout layout = layout_from_spec(layout_name);
            if (do_validate) {
                const auto violations = validate_coloring(layout);
                for (const auto& v : violations)
                    out << v.kind << " id=" << v.subject_id << " " << v.detail
                        << "\n";
                out << layout.name << ": " << violations.size()
                    << " violations\n";
                if (!violations.empty()) return 1;
            }
            const std::string doc = layout_to_json(layout);
            if (export_path.empty()) {
                if (!do_validate) out << doc << "\n";
            } else {
                write_file(export_path, doc);
            }
            return 0;
        }
        if (summarize->parsed()) {
            const DeviceCalibration cal = load_calibration(calib_file);
            const auto [mean, sigma] = mean_error(cal);
            char line[128];
            std::snprintf(line, sizeof(line), "%s,%.2f,%.2f",
                          cal.device.c_str(), 100.0 * mean, 100.0 * sigma);
            out << line << "\n";
            return 0;
        }
        err << "calib: missing subcommand (try: calib summarize <file>)\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace floquet
