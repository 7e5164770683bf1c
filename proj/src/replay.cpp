#include "hfrlab/replay.hpp"

#include <stdexcept>
#include <string>

namespace hfrlab {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw std::invalid_argument("ReplayBuffer: capacity must be positive");
}

void ReplayBuffer::push(Transition tr) {
    if (slots_.size() < capacity_) {
        slots_.push_back(std::move(tr));
    } else {
        slots_[head_] = std::move(tr);
    }
    head_ = (head_ + 1) % capacity_;
    if (size_ < capacity_) ++size_;
}

const Transition& ReplayBuffer::at(std::size_t logical_index) const {
    if (logical_index >= size_) throw std::out_of_range("ReplayBuffer::at");
    if (size_ < capacity_) return slots_[logical_index];
    return slots_[(head_ + logical_index) % capacity_];
}

std::vector<const Transition*> ReplayBuffer::sample(std::size_t n, Rng& rng) const {
    if (empty()) throw std::runtime_error("ReplayBuffer::sample: buffer is empty");
    std::vector<const Transition*> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(&at(rng.integer(size_)));
    return out;
}

std::vector<const Transition*> ReplayBuffer::recent(std::size_t n) const {
    const std::size_t take = n < size_ ? n : size_;
    std::vector<const Transition*> out;
    out.reserve(take);
    for (std::size_t i = size_ - take; i < size_; ++i) out.push_back(&at(i));
    return out;
}

TaskReplayBuffers::TaskReplayBuffers(const std::vector<int>& task_ids, std::size_t capacity) {
    for (int id : task_ids) buffers_.emplace(id, ReplayBuffer(capacity));
}

ReplayBuffer& TaskReplayBuffers::buffer(int task_id) {
    auto it = buffers_.find(task_id);
    if (it == buffers_.end())
        throw std::invalid_argument("TaskReplayBuffers: unknown task_id " + std::to_string(task_id));
    return it->second;
}

const ReplayBuffer& TaskReplayBuffers::buffer(int task_id) const {
    auto it = buffers_.find(task_id);
    if (it == buffers_.end())
        throw std::invalid_argument("TaskReplayBuffers: unknown task_id " + std::to_string(task_id));
    return it->second;
}

void TaskReplayBuffers::push_trajectory(int task_id, const Trajectory& traj) {
    ReplayBuffer& buf = buffer(task_id);
    for (const Transition& tr : traj.steps) buf.push(tr);
}

std::vector<int> TaskReplayBuffers::task_ids() const {
    std::vector<int> ids;
    ids.reserve(buffers_.size());
    for (const auto& [id, _] : buffers_) ids.push_back(id);
    return ids;
}

} // namespace hfrlab
