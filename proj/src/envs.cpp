#include "hfrlab/envs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hfrlab::envs {

namespace {

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void check_action(std::span<const double> action, std::size_t dim) {
    if (action.size() != dim)
        throw std::invalid_argument("step: action dimension mismatch");
    for (double a : action)
        if (!std::isfinite(a)) throw std::invalid_argument("step: non-finite action");
}

} // namespace

bool TaskFamily::success(const Trajectory& traj, const TaskSpec& task) const {
    for (const Transition& tr : traj.steps) {
        if (reward_and_done(task, tr.state, tr.action, tr.next_state).done) return true;
    }
    return false;
}

const TaskSpec& TaskFamily::task_by_id(int task_id) const {
    if (task_cache_.empty()) {
        task_cache_ = train_tasks();
        for (const TaskSpec& t : test_tasks()) {
            const bool known = std::any_of(task_cache_.begin(), task_cache_.end(),
                                           [&](const TaskSpec& s) { return s.task_id == t.task_id; });
            if (!known) task_cache_.push_back(t);
        }
    }
    for (const TaskSpec& t : task_cache_)
        if (t.task_id == task_id) return t;
    throw std::invalid_argument("unknown task_id " + std::to_string(task_id) +
                                " in family " + name());
}

// --- FourCorners -----------------------------------------------------------

// Corner order: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right.
std::vector<TaskSpec> FourCorners::train_tasks() const {
    const double g = kGoalCoord;
    return {
        {0, {-g, g}, 0.25},
        {1, {g, g}, 0.25},
        {2, {-g, -g}, 0.25},
        {3, {g, -g}, 0.25},
    };
}

// With four corners the held-out set coincides with the training set.
std::vector<TaskSpec> FourCorners::test_tasks() const { return train_tasks(); }

std::vector<double> FourCorners::reset(Rng&) const { return {0.0, 0.0}; }

std::vector<double> FourCorners::step(std::span<const double> state,
                                      std::span<const double> action) const {
    check_action(action, 2);
    std::vector<double> next(2);
    for (int i = 0; i < 2; ++i) {
        const double a = clamp(action[i], -kMaxStep, kMaxStep);
        next[i] = clamp(state[i] + a, -1.0, 1.0);
    }
    return next;
}

RewardDone FourCorners::reward_and_done(const TaskSpec& task, std::span<const double>,
                                        std::span<const double>,
                                        std::span<const double> next_state) const {
    const double gx = task.params[0], gy = task.params[1];
    const double dx = next_state[0] - gx, dy = next_state[1] - gy;
    if (std::sqrt(dx * dx + dy * dy) < kGoalRadius) return {0.0, true};
    const double cx = std::copysign(kPenaltyCenter, gx);
    const double cy = std::copysign(kPenaltyCenter, gy);
    if (std::abs(next_state[0] - cx) <= kPenaltyHalfSide &&
        std::abs(next_state[1] - cy) <= kPenaltyHalfSide)
        return {kPenaltyReward, false};
    return {kStepReward, false};
}

// --- VelocityMatch1D --------------------------------------------------------

std::vector<TaskSpec> VelocityMatch1D::train_tasks() const {
    std::vector<TaskSpec> tasks;
    for (std::size_t i = 0; i < kTrainTasks; ++i) {
        const double target = 3.0 * (static_cast<double>(i) + 0.5) / kTrainTasks;
        tasks.push_back({static_cast<int>(i), {target}, 1.0 / kTrainTasks});
    }
    return tasks;
}

std::vector<TaskSpec> VelocityMatch1D::test_tasks() const {
    std::vector<TaskSpec> tasks;
    for (std::size_t i = 0; i < kTestTasks; ++i) {
        const double target = 3.0 * (static_cast<double>(i) + 0.25) / kTestTasks;
        tasks.push_back({static_cast<int>(kTrainTasks + i), {target}, 1.0 / kTestTasks});
    }
    return tasks;
}

std::vector<double> VelocityMatch1D::reset(Rng&) const { return {0.0}; }

std::vector<double> VelocityMatch1D::step(std::span<const double> state,
                                          std::span<const double> action) const {
    check_action(action, 1);
    return {state[0] + clamp(action[0], -kMaxStep, kMaxStep)};
}

RewardDone VelocityMatch1D::reward_and_done(const TaskSpec& task, std::span<const double>,
                                            std::span<const double>,
                                            std::span<const double> next_state) const {
    const bool match = std::abs(next_state[0] - task.params[0]) < kMatchRadius;
    return {match ? 1.0 : 0.0, false};
}

// --- registry and helpers ---------------------------------------------------

std::unique_ptr<TaskFamily> make_family(const std::string& name) {
    if (name == "four-corners") return std::make_unique<FourCorners>();
    if (name == "vel-1d") return std::make_unique<VelocityMatch1D>();
    throw std::invalid_argument("unknown task family '" + name +
                                "' (expected four-corners or vel-1d)");
}

double discounted_return(const TaskFamily& family, const Trajectory& traj,
                         const TaskSpec& task, double gamma) {
    double total = 0.0, weight = 1.0;
    for (const Transition& tr : traj.steps) {
        total += weight * family.reward_and_done(task, tr.state, tr.action, tr.next_state).reward;
        weight *= gamma;
    }
    return total;
}

void dump_trajectory(const std::filesystem::path& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("dump_trajectory: cannot open " + path.string());
    out.precision(17);
    for (const Transition& tr : traj.steps) {
        bool first = true;
        auto emit = [&](double v) {
            if (!first) out << ',';
            out << v;
            first = false;
        };
        for (double v : tr.state) emit(v);
        for (double v : tr.action) emit(v);
        emit(tr.reward);
        for (double v : tr.next_state) emit(v);
        emit(tr.done ? 1.0 : 0.0);
        out << '\n';
    }
}

Trajectory load_trajectory(const std::filesystem::path& path, std::size_t state_dim,
                           std::size_t action_dim) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_trajectory: cannot open " + path.string());
    Trajectory traj;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
        const std::size_t expected = 2 * state_dim + action_dim + 2;
        if (vals.size() != expected)
            throw std::runtime_error("load_trajectory: bad field count in " + path.string());
        Transition tr;
        std::size_t k = 0;
        tr.state.assign(vals.begin(), vals.begin() + state_dim);
        k += state_dim;
        tr.action.assign(vals.begin() + k, vals.begin() + k + action_dim);
        k += action_dim;
        tr.reward = vals[k++];
        tr.next_state.assign(vals.begin() + k, vals.begin() + k + state_dim);
        k += state_dim;
        tr.done = vals[k] != 0.0;
        traj.steps.push_back(std::move(tr));
    }
    return traj;
}

} // namespace hfrlab::envs
