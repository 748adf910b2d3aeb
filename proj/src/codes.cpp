#include "floquet/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "floquet/rng.hpp"
#include "floquet/simulator.hpp"

namespace floquet {

std::vector<RoundSpec> honeycomb_schedule(int n_rounds,
                                          const std::array<Color, 3>& order) {
    if (n_rounds < 7)
        throw std::invalid_argument(
            "honeycomb schedules need at least 7 rounds");
    if (std::set<Color>(order.begin(), order.end()).size() != 3)
        throw std::invalid_argument("order must contain all three colors");
    std::vector<RoundSpec> rounds;
    rounds.reserve(n_rounds);
    for (int i = 0; i < n_rounds; ++i)
        rounds.push_back({order[i % 3], Basis::Native});
    return rounds;
}

std::vector<RoundSpec> color_code_schedule(int n_rounds, Color start_color,
                                           Basis start_basis) {
    if (n_rounds < 10)
        throw std::invalid_argument(
            "Color-code schedules need at least 10 rounds");
    if (start_basis != Basis::X && start_basis != Basis::Z)
        throw std::invalid_argument("Color-code rounds use basis x or z only");
    std::vector<RoundSpec> rounds;
    rounds.reserve(n_rounds);
    const int c0 = static_cast<int>(start_color);
    for (int i = 0; i < n_rounds; ++i) {
        const Color c = static_cast<Color>((c0 + i) % 3);
        const Basis b = (i % 2 == 0) ? start_basis
                        : (start_basis == Basis::X ? Basis::Z : Basis::X);
        rounds.push_back({c, b});
    }
    return rounds;
}

RecordPlan plan_records(const Layout& layout,
                        const std::vector<RoundSpec>& rounds) {
    RecordPlan plan;
    std::vector<int> instances(layout.links.size(), 0);
    for (int r = 0; r < static_cast<int>(rounds.size()); ++r) {
        for (int link_id : layout.links_of_color(rounds[r].color)) {
            const int rec = static_cast<int>(plan.records.size());
            const int inst = ++instances[link_id];
            plan.records.push_back({r + 1, link_id, inst});
            plan.by_round_link[{r + 1, link_id}] = rec;
            plan.by_link_instance[{link_id, inst}] = rec;
        }
    }
    return plan;
}

namespace {

std::vector<int> boundary_of_color(const Layout& layout, const Plaquette& p,
                                   Color c) {
    std::vector<int> out;
    for (int link_id : p.boundary)
        if (layout.links[link_id].color == c) out.push_back(link_id);
    std::sort(out.begin(), out.end());
    return out;
}

// Rewrites a with-reset parity set into raw no-reset records: the bit
// recorded at instance k is the XOR of parities 1..k, so parity k = raw(k)
// xor raw(k-1) and the records expand pairwise and cancel mod 2.
std::vector<int> to_no_reset_records(const std::vector<int>& records,
                                     const RecordPlan& plan) {
    std::set<std::pair<int, int>> odd;  // (link, instance) with odd parity
    auto toggle = [&](int link, int instance) {
        auto it = odd.find({link, instance});
        if (it == odd.end())
            odd.insert({link, instance});
        else
            odd.erase(it);
    };
    for (int rec : records) {
        const auto& entry = plan.records[rec];
        toggle(entry.link, entry.instance);
        if (entry.instance > 1) toggle(entry.link, entry.instance - 1);
    }
    std::vector<int> out;
    for (const auto& key : odd) out.push_back(plan.by_link_instance.at(key));
    std::sort(out.begin(), out.end());
    return out;
}

Detector make_detector(const RecordPlan& plan, const Plaquette& p,
                       Basis basis, const std::vector<int>& eval_a,
                       const std::vector<int>& eval_b, bool reset_aux) {
    std::set<int> records(eval_a.begin(), eval_a.end());
    for (int rec : eval_b) {
        if (records.count(rec))
            records.erase(rec);
        else
            records.insert(rec);
    }
    Detector det;
    det.plaquette = p.id;
    det.color = p.color;
    det.basis = basis;
    det.records.assign(records.begin(), records.end());
    if (!reset_aux) det.records = to_no_reset_records(det.records, plan);
    return det;
}

}  // namespace

std::vector<Detector> honeycomb_detectors(const Layout& layout,
                                          const std::vector<RoundSpec>& rounds,
                                          bool reset_aux) {
    if (rounds.size() < 7)
        throw std::invalid_argument("honeycomb schedules have >= 7 rounds");
    for (const auto& r : rounds)
        if (r.basis != Basis::Native)
            throw std::invalid_argument(
                "honeycomb rounds measure links in their native basis");

    const RecordPlan plan = plan_records(layout, rounds);
    const int n = static_cast<int>(rounds.size());
    std::vector<Detector> detectors;

    for (const auto& p : layout.plaquettes) {
        std::set<Color> pair_colors{Color::Red, Color::Green, Color::Blue};
        pair_colors.erase(p.color);

        // One evaluation per consecutive round pair covering the two
        // boundary colors; detectors compare consecutive evaluations.
        std::vector<std::vector<int>> evals;
        for (int i = 1; i < n; ++i) {
            const Color ca = rounds[i - 1].color;
            const Color cb = rounds[i].color;
            if (std::set<Color>{ca, cb} != pair_colors) continue;
            std::vector<int> records;
            for (int link_id : boundary_of_color(layout, p, ca))
                records.push_back(plan.by_round_link.at({i, link_id}));
            for (int link_id : boundary_of_color(layout, p, cb))
                records.push_back(plan.by_round_link.at({i + 1, link_id}));
            evals.push_back(std::move(records));
        }
        for (size_t e = 0; e + 1 < evals.size(); ++e) {
            Detector det = make_detector(plan, p, Basis::Native,
                                         evals[e], evals[e + 1], reset_aux);
            det.id = static_cast<int>(detectors.size());
            detectors.push_back(std::move(det));
        }
    }
    return detectors;
}

std::vector<Detector> color_code_detectors(
    const Layout& layout, const std::vector<RoundSpec>& rounds,
    bool reset_aux) {
    if (rounds.size() < 10)
        throw std::invalid_argument("Color-code schedules have >= 10 rounds");
    for (const auto& r : rounds)
        if (r.basis != Basis::X && r.basis != Basis::Z)
            throw std::invalid_argument("Color-code rounds use basis x or z");

    const RecordPlan plan = plan_records(layout, rounds);
    const int n = static_cast<int>(rounds.size());
    std::vector<Detector> detectors;

    for (const auto& p : layout.plaquettes) {
        for (Basis alpha : {Basis::X, Basis::Z}) {
            const Basis not_alpha = alpha == Basis::X ? Basis::Z : Basis::X;

            std::vector<int> eval_rounds;  // 1-based
            for (int i = 1; i <= n; ++i)
                if (rounds[i - 1].basis == alpha &&
                    rounds[i - 1].color != p.color)
                    eval_rounds.push_back(i);

            std::vector<int> disturbed;  // rounds that randomize W^alpha
            for (int i = 1; i <= n; ++i)
                if (rounds[i - 1].color == p.color &&
                    rounds[i - 1].basis == not_alpha)
                    disturbed.push_back(i);

            auto eval_records = [&](int round) {
                std::vector<int> records;
                for (int link_id : boundary_of_color(
                         layout, p, rounds[round - 1].color))
                    records.push_back(plan.by_round_link.at({round, link_id}));
                return records;
            };

            for (size_t e = 0; e + 1 < eval_rounds.size(); ++e) {
                const int a = eval_rounds[e];
                const int b = eval_rounds[e + 1];
                const bool blocked =
                    std::any_of(disturbed.begin(), disturbed.end(),
                                [&](int d) { return a < d && d < b; });
                if (blocked) continue;
                Detector det =
                    make_detector(plan, p, alpha, eval_records(a),
                                  eval_records(b), reset_aux);
                det.id = static_cast<int>(detectors.size());
                detectors.push_back(std::move(det));
            }
        }
    }
    return detectors;
}

std::vector<VerifyFailure> verify_detectors(const Circuit& circuit,
                                            const std::vector<Detector>& dets,
                                            int trials, uint64_t base_seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<VerifyFailure> failures;
    for (int t = 0; t < trials; ++t) {
        const auto bits = run_shot(circuit, Rng::shot_seed(base_seed, t));
        for (const auto& det : dets) {
            int parity = 0;
            for (int rec : det.records) parity ^= bits[rec];
            if (parity) failures.push_back({det.id, t});
        }
    }
    return failures;
}

}  // namespace floquet
