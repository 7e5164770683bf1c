#pragma once

#include <cstddef>
#include <vector>

namespace hfrlab {

/// One task from a family: same dynamics as its siblings, own reward
/// function. `params` is the reward parameter vector (goal point, target
/// velocity, ...).
struct TaskSpec {
    int task_id = 0;
    std::vector<double> params;
    double prior_weight = 1.0;
};

struct Transition {
    std::vector<double> state;
    std::vector<double> action;
    double reward = 0.0;
    std::vector<double> next_state;
    bool done = false;
};

/// Ordered transitions plus the id of the task they were collected for;
/// the unit of relabeling.
struct Trajectory {
    std::vector<Transition> steps;
    int origin_task_id = 0;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
};

/// Throws std::invalid_argument unless consecutive states chain, rewards are
/// finite, and done appears only on the final transition.
void validate_trajectory(const Trajectory& traj);

} // namespace hfrlab
