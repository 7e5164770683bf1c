#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hfrlab/rng.hpp"
#include "hfrlab/task.hpp"

namespace hfrlab {

/// Fixed-capacity FIFO transition store (ring buffer). Logical index 0 is
/// the oldest retained transition.
class ReplayBuffer {
public:
    explicit ReplayBuffer(std::size_t capacity = 1'000'000);

    void push(Transition tr);
    std::size_t size() const { return size_; }
    std::size_t capacity() const { return capacity_; }
    bool empty() const { return size_ == 0; }

    const Transition& at(std::size_t logical_index) const;

    /// Uniform sample with replacement.
    std::vector<const Transition*> sample(std::size_t n, Rng& rng) const;

    /// Up to n most recent transitions, oldest-first.
    std::vector<const Transition*> recent(std::size_t n) const;

private:
    std::vector<Transition> slots_;
    std::size_t capacity_;
    std::size_t head_ = 0;  // next write position
    std::size_t size_ = 0;
};

/// Per-task replay buffers B_psi.
class TaskReplayBuffers {
public:
    TaskReplayBuffers(const std::vector<int>& task_ids, std::size_t capacity = 1'000'000);

    ReplayBuffer& buffer(int task_id);
    const ReplayBuffer& buffer(int task_id) const;
    bool contains(int task_id) const { return buffers_.count(task_id) > 0; }

    void push_trajectory(int task_id, const Trajectory& traj);

    std::vector<int> task_ids() const;

private:
    std::map<int, ReplayBuffer> buffers_;
};

} // namespace hfrlab
