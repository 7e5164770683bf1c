#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hfrlab/rng.hpp"
#include "hfrlab/task.hpp"

namespace hfrlab::envs {

struct RewardDone {
    double reward = 0.0;
    bool done = false;
};

/// A family of tasks sharing state space, action space, and dynamics, and
/// differing only in the reward function. reward_and_done is a pure function
/// of (task, transition) and can be queried for any task on any transition;
/// it is the hindsight reward oracle.
class TaskFamily {
public:
    virtual ~TaskFamily() = default;

    virtual std::string name() const = 0;
    virtual std::size_t state_dim() const = 0;
    virtual std::size_t action_dim() const = 0;
    virtual std::size_t horizon() const = 0;
    virtual double discount() const = 0;
    /// Meta-test exploration budget, in env steps.
    virtual std::size_t exploration_steps() const = 0;

    virtual std::vector<TaskSpec> train_tasks() const = 0;
    virtual std::vector<TaskSpec> test_tasks() const = 0;

    virtual std::vector<double> reset(Rng& rng) const = 0;

    /// Dynamics only; identical for every task in the family. Never
    /// terminates (termination is decided by reward_and_done). Throws on
    /// non-finite actions.
    virtual std::vector<double> step(std::span<const double> state,
                                     std::span<const double> action) const = 0;

    virtual RewardDone reward_and_done(const TaskSpec& task,
                                       std::span<const double> state,
                                       std::span<const double> action,
                                       std::span<const double> next_state) const = 0;

    /// true iff the task's success predicate holds anywhere along the
    /// trajectory.
    virtual bool success(const Trajectory& traj, const TaskSpec& task) const;

    const TaskSpec& task_by_id(int task_id) const;

protected:
    mutable std::vector<TaskSpec> task_cache_;
};

/// Point robot in the square [-1,1]^2, start at the center, four corner
/// goals. Reaching within 0.2 of the goal gives reward 0 and ends the
/// episode; a square penalty region in the goal's quadrant gives -3;
/// everywhere else -1. Horizon 20, discount 0.9.
class FourCorners final : public TaskFamily {
public:
    static constexpr double kGoalRadius = 0.2;
    static constexpr double kMaxStep = 0.1;
    static constexpr double kGoalCoord = 0.9;
    static constexpr double kPenaltyCenter = 0.5;
    static constexpr double kPenaltyHalfSide = 0.25;
    static constexpr double kStepReward = -1.0;
    static constexpr double kPenaltyReward = -3.0;

    std::string name() const override { return "four-corners"; }
    std::size_t state_dim() const override { return 2; }
    std::size_t action_dim() const override { return 2; }
    std::size_t horizon() const override { return 20; }
    double discount() const override { return 0.90; }
    std::size_t exploration_steps() const override { return 380; }

    std::vector<TaskSpec> train_tasks() const override;
    std::vector<TaskSpec> test_tasks() const override;

    std::vector<double> reset(Rng& rng) const override;
    std::vector<double> step(std::span<const double> state,
                             std::span<const double> action) const override;
    RewardDone reward_and_done(const TaskSpec& task, std::span<const double> state,
                               std::span<const double> action,
                               std::span<const double> next_state) const override;
};

/// Scalar velocity matching: the action nudges the velocity, reward 1 while
/// within 0.3 of the task's target velocity, 0 otherwise. Horizon 40,
/// discount 0.99. Targets are spread uniformly over [0, 3].
class VelocityMatch1D final : public TaskFamily {
public:
    static constexpr double kMaxStep = 0.2;
    static constexpr double kMatchRadius = 0.3;
    static constexpr std::size_t kTrainTasks = 8;
    static constexpr std::size_t kTestTasks = 4;

    std::string name() const override { return "vel-1d"; }
    std::size_t state_dim() const override { return 1; }
    std::size_t action_dim() const override { return 1; }
    std::size_t horizon() const override { return 40; }
    double discount() const override { return 0.99; }
    std::size_t exploration_steps() const override { return 200; }

    std::vector<TaskSpec> train_tasks() const override;
    std::vector<TaskSpec> test_tasks() const override;

    std::vector<double> reset(Rng& rng) const override;
    std::vector<double> step(std::span<const double> state,
                             std::span<const double> action) const override;
    RewardDone reward_and_done(const TaskSpec& task, std::span<const double> state,
                               std::span<const double> action,
                               std::span<const double> next_state) const override;
};

/// Families keyed by name: "four-corners", "vel-1d".
std::unique_ptr<TaskFamily> make_family(const std::string& name);

/// Discounted return of the trajectory under `task`, rewards recomputed via
/// the reward oracle (the stored rewards are ignored).
double discounted_return(const TaskFamily& family, const Trajectory& traj,
                         const TaskSpec& task, double gamma);

/// Trajectory dump: one transition per line, comma-separated
/// state..., action..., reward, next_state..., done.
void dump_trajectory(const std::filesystem::path& path, const Trajectory& traj);
Trajectory load_trajectory(const std::filesystem::path& path, std::size_t state_dim,
                           std::size_t action_dim);

} // namespace hfrlab::envs
