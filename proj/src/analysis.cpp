#include "floquet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace floquet {

namespace {

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void write_meta_comment(std::ostream& out, const RunMeta& m,
                        bool include_p = true) {
    out << "# floquet-report v1\n";
    out << "# code=" << m.code << " layout=" << m.layout
        << " rounds=" << m.rounds << " reset=" << (m.reset ? 1 : 0);
    if (m.uniform_noise) {
        if (include_p) out << " p=" << fixed6(m.p);
    } else {
        out << " p_prep=" << fixed6(m.model.p_prep)
            << " p_meas=" << fixed6(m.model.p_meas)
            << " p_cx=" << fixed6(m.model.p_cx)
            << " p_idle=" << fixed6(m.model.p_idle);
    }
    out << " shots=" << m.shots << " seed=" << m.seed << "\n";
}

std::string p_column(const RunMeta& m) {
    return m.uniform_noise ? fixed6(m.p) : std::string();
}

}  // namespace

int default_rounds(const std::string& code) {
    if (code == "honeycomb") return 7;
    if (code == "color") return 10;
    throw std::invalid_argument("unknown code: " + code);
}

DetectionReport detection_rates(const ShotTable& shots,
                                const std::vector<Detector>& detectors,
                                RunMeta meta) {
    DetectionReport report;
    report.meta = std::move(meta);
    report.meta.shots = shots.shots;

    for (const auto& det : detectors) {
        for (int rec : det.records)
            if (rec < 0 || rec >= shots.num_records)
                throw std::out_of_range("detector record out of range");
        int64_t fires = 0;
        for (int64_t s = 0; s < shots.shots; ++s) {
            int parity = 0;
            for (int rec : det.records) parity ^= shots.get(s, rec);
            fires += parity;
        }
        DetectorRate dr;
        dr.detector = det.id;
        dr.plaquette = det.plaquette;
        dr.color = det.color;
        dr.basis = det.basis;
        dr.fires = fires;
        dr.rate = static_cast<double>(fires) / static_cast<double>(shots.shots);
        dr.stderr_ =
            std::sqrt(dr.rate * (1.0 - dr.rate) /
                      static_cast<double>(shots.shots));
        report.detectors.push_back(dr);
    }

    // Plaquette-level rate: mean over the detectors of one (plaquette,
    // basis); the minimal schedules have exactly one detector per pair.
    std::map<std::pair<int, int>, std::vector<const DetectorRate*>> groups;
    for (const auto& dr : report.detectors)
        groups[{dr.plaquette, static_cast<int>(dr.basis)}].push_back(&dr);
    for (const auto& [key, members] : groups) {
        PlaquetteRate pr;
        pr.plaquette = key.first;
        pr.basis = static_cast<Basis>(key.second);
        pr.color = members.front()->color;
        double sum = 0.0, var = 0.0;
        for (const auto* dr : members) {
            sum += dr->rate;
            var += dr->stderr_ * dr->stderr_;
        }
        const double k = static_cast<double>(members.size());
        pr.rate = sum / k;
        pr.stderr_ = std::sqrt(var) / k;
        report.plaquettes.push_back(pr);
    }

    if (!report.plaquettes.empty()) {
        double sum = 0.0;
        report.min = report.plaquettes.front().rate;
        report.max = report.min;
        for (const auto& pr : report.plaquettes) {
            sum += pr.rate;
            report.min = std::min(report.min, pr.rate);
            report.max = std::max(report.max, pr.rate);
        }
        report.mean = sum / static_cast<double>(report.plaquettes.size());
    }
    return report;
}

std::tuple<double, double, double> aggregate_bars(
    const DetectionReport& report) {
    if (report.plaquettes.empty())
        throw std::invalid_argument("report has no plaquette rates");
    return {report.mean, report.min, report.max};
}

std::vector<DetectionReport> sweep(const std::string& code,
                                   const Layout& layout,
                                   const std::vector<double>& p_values,
                                   int64_t shots, uint64_t base_seed,
                                   bool reset_aux, int rounds, int threads) {
    if (p_values.empty()) throw std::invalid_argument("empty p list");
    if (rounds == 0) rounds = default_rounds(code);

    std::vector<RoundSpec> schedule;
    std::vector<Detector> detectors;
    if (code == "honeycomb") {
        schedule = honeycomb_schedule(rounds);
        detectors = honeycomb_detectors(layout, schedule, reset_aux);
    } else if (code == "color") {
        schedule = color_code_schedule(rounds);
        detectors = color_code_detectors(layout, schedule, reset_aux);
    } else {
        throw std::invalid_argument("unknown code: " + code);
    }
    const Circuit circuit = schedule_rounds(layout, schedule, reset_aux);

    std::vector<DetectionReport> reports;
    for (double p : p_values) {
        const Circuit noisy = apply_noise(circuit, NoiseModel::uniform(p));
        const ShotTable table = run_shots(noisy, shots, base_seed, threads);
        RunMeta meta;
        meta.code = code;
        meta.layout = layout.name;
        meta.rounds = rounds;
        meta.reset = reset_aux;
        meta.uniform_noise = true;
        meta.p = p;
        meta.model = NoiseModel::uniform(p);
        meta.seed = base_seed;
        reports.push_back(detection_rates(table, detectors, std::move(meta)));
    }
    return reports;
}

void write_report_csv(std::ostream& out, const DetectionReport& report) {
    write_meta_comment(out, report.meta);
    out << "code,layout,reset,p,shots,seed,plaquette,color,basis,rate,stderr,"
           "mean,min,max\n";
    const RunMeta& m = report.meta;
    const std::string prefix = m.code + "," + m.layout + "," +
                               (m.reset ? "1" : "0") + "," + p_column(m) +
                               "," + std::to_string(m.shots) + "," +
                               std::to_string(m.seed) + ",";
    for (const auto& pr : report.plaquettes) {
        out << prefix << pr.plaquette << "," << to_string(pr.color) << ","
            << to_string(pr.basis) << "," << fixed6(pr.rate) << ","
            << fixed6(pr.stderr_) << ",,,\n";
    }
    out << prefix << "ALL,ALL,ALL,,," << fixed6(report.mean) << ","
        << fixed6(report.min) << "," << fixed6(report.max) << "\n";
}

void write_sweep_csv(std::ostream& out,
                     const std::vector<DetectionReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("no reports");
    write_meta_comment(out, reports.front().meta, /*include_p=*/false);
    out << "code,layout,reset,p,shots,seed,mean,min,max\n";
    for (const auto& report : reports) {
        const RunMeta& m = report.meta;
        out << m.code << "," << m.layout << "," << (m.reset ? "1" : "0") << ","
            << p_column(m) << "," << m.shots << "," << m.seed << ","
            << fixed6(report.mean) << "," << fixed6(report.min) << ","
            << fixed6(report.max) << "\n";
    }
}

namespace {

nlohmann::json meta_json(const RunMeta& m) {
    nlohmann::json j{{"code", m.code},       {"layout", m.layout},
                     {"rounds", m.rounds},   {"reset", m.reset},
                     {"shots", m.shots},     {"seed", m.seed}};
    if (m.uniform_noise)
        j["p"] = m.p;
    else
        j["noise"] = {{"p_prep", m.model.p_prep},
                      {"p_meas", m.model.p_meas},
                      {"p_cx", m.model.p_cx},
                      {"p_idle", m.model.p_idle}};
    return j;
}

nlohmann::json report_json(const DetectionReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pr : report.plaquettes)
        rows.push_back({{"plaquette", pr.plaquette},
                        {"color", to_string(pr.color)},
                        {"basis", to_string(pr.basis)},
                        {"rate", pr.rate},
                        {"stderr", pr.stderr_}});
    return nlohmann::json{{"config", meta_json(report.meta)},
                          {"rows", rows},
                          {"aggregate",
                           {{"mean", report.mean},
                            {"min", report.min},
                            {"max", report.max}}}};
}

}  // namespace

std::string report_to_json(const DetectionReport& report) {
    return report_json(report).dump(2);
}

std::string sweep_to_json(const std::vector<DetectionReport>& reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& report : reports) j.push_back(report_json(report));
    return j.dump(2);
}

}  // namespace floquet
