#include "twlga/cluster_sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

#include "twlga/error.hpp"

namespace twlga {

namespace {

double pairs(std::size_t k) { return 0.5 * static_cast<double>(k) * static_cast<double>(k - 1); }

double remote_fraction(std::size_t k) {
    return k == 0 ? 0.0 : static_cast<double>(k - 1) / static_cast<double>(k);
}

double transfer_seconds(double size_mb, std::size_t k, const OverheadModel& m) {
    if (std::isinf(m.transfer_rate)) return 0.0;
    return size_mb * remote_fraction(k) / m.transfer_rate;
}

// Per-node work list; `next` indexes the phase that starts when the node frees up.
struct NodePlan {
    std::vector<BusyInterval> phases;  // start/end filled in as events fire
    std::size_t next = 0;
};

struct Event {
    double time;
    std::size_t node;
    bool operator>(const Event& o) const { return std::tie(time, node) > std::tie(o.time, o.node); }
};

}  // namespace

void OverheadModel::validate() const {
    if (!(startup >= 0.0) || !std::isfinite(startup)) {
        throw InvalidArgument("overhead model: startup must be finite and >= 0");
    }
    if (!(coordination >= 0.0) || !std::isfinite(coordination)) {
        throw InvalidArgument("overhead model: coordination must be finite and >= 0");
    }
    if (!(transfer_rate > 0.0)) {
        throw InvalidArgument("overhead model: transfer_rate must be > 0 (or infinite)");
    }
    if (!(compute_rate > 0.0)) {
        throw InvalidArgument("overhead model: compute_rate must be > 0");
    }
}

double OverheadModel::even_split_makespan(double size_mb, std::size_t nodes) const {
    validate();
    if (nodes < 1) throw InvalidArgument("even split needs at least one node");
    const double share = size_mb / static_cast<double>(nodes);
    return startup + coordination * pairs(nodes) + transfer_seconds(share, nodes, *this) +
           share / compute_rate;
}

double SimResult::busy_time() const noexcept {
    double t = 0.0;
    for (const auto& node : busy) {
        for (const auto& iv : node) t += iv.end - iv.start;
    }
    return t;
}

SimResult simulate(const Assignment& a, std::span<const double> sizes_mb, const OverheadModel& model) {
    model.validate();
    if (a.n_tasks() != sizes_mb.size()) {
        throw InvalidArgument("simulate: " + std::to_string(sizes_mb.size()) + " task sizes for " +
                              std::to_string(a.n_tasks()) + " assigned tasks");
    }
    for (double s : sizes_mb) {
        if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("simulate: task sizes must be positive");
    }

    const std::size_t R = a.n_nodes();
    const std::size_t k = a.active_nodes();

    std::vector<NodePlan> plan(R);
    for (std::size_t i = 0; i < R; ++i) {
        if (a.tasks_of[i].empty()) continue;
        auto& ph = plan[i].phases;
        ph.push_back({0.0, model.startup, Phase::Startup, 0});
        ph.push_back({0.0, model.coordination * pairs(k), Phase::Coordination, 0});
        for (std::size_t t : a.tasks_of[i]) {
            if (t >= sizes_mb.size()) throw InvalidArgument("simulate: assignment names an unknown task");
            ph.push_back({0.0, transfer_seconds(sizes_mb[t], k, model), Phase::Transfer, t});
            ph.push_back({0.0, sizes_mb[t] / model.compute_rate, Phase::Compute, t});
        }
    }

    SimResult res;
    res.busy.resize(R);
    res.completion.assign(R, 0.0);

    // Each event marks a node becoming free; the handler starts its next phase
    // (end holds the phase duration until the phase is started).
    std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
    for (std::size_t i = 0; i < R; ++i) {
        if (!plan[i].phases.empty()) events.push({0.0, i});
    }
    while (!events.empty()) {
        const Event ev = events.top();
        events.pop();
        auto& np = plan[ev.node];
        if (np.next == np.phases.size()) {
            res.completion[ev.node] = ev.time;
            continue;
        }
        BusyInterval iv = np.phases[np.next++];
        const double duration = iv.end;
        iv.start = ev.time;
        iv.end = ev.time + duration;
        if (duration > 0.0) {
            res.busy[ev.node].push_back(iv);
            switch (iv.phase) {
                case Phase::Startup:
                case Phase::Coordination: res.breakdown.overhead += duration; break;
                case Phase::Transfer: res.breakdown.transfer += duration; break;
                case Phase::Compute: res.breakdown.compute += duration; break;
            }
        }
        events.push({iv.end, ev.node});
    }

    for (std::size_t i = 0; i < R; ++i) {
        if (!a.tasks_of[i].empty()) res.makespan = std::max(res.makespan, res.completion[i]);
    }
    return res;
}

SimResult simulate(const Assignment& a, const Instance& inst, const OverheadModel& model) {
    inst.validate();
    if (!inst.tasks.sizes_mb) throw InvalidArgument("simulate: instance has no task sizes");
    if (a.n_nodes() != inst.n_nodes()) throw InvalidArgument("simulate: assignment/instance node mismatch");
    return simulate(a, *inst.tasks.sizes_mb, model);
}

std::vector<ScalingPoint> scaling_experiment(std::span<const double> sizes_mb,
                                             std::span<const std::size_t> node_counts,
                                             const OverheadModel& model) {
    model.validate();
    if (sizes_mb.empty() || node_counts.empty()) {
        throw InvalidArgument("scaling_experiment: sizes and node counts must be nonempty");
    }
    std::vector<ScalingPoint> out;
    out.reserve(sizes_mb.size() * node_counts.size());
    for (double size : sizes_mb) {
        if (!(size > 0.0)) throw InvalidArgument("scaling_experiment: sizes must be positive");
        for (std::size_t k : node_counts) {
            if (k < 1) throw InvalidArgument("scaling_experiment: node counts must be >= 1");
            Assignment a;
            a.tasks_of.resize(k);
            for (std::size_t i = 0; i < k; ++i) a.tasks_of[i].push_back(i);
            const std::vector<double> split(k, size / static_cast<double>(k));
            out.push_back({size, k, simulate(a, split, model).makespan});
        }
    }
    return out;
}

}  // namespace twlga
