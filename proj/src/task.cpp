#include "hfrlab/task.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hfrlab {

void validate_trajectory(const Trajectory& traj) {
    for (std::size_t t = 0; t < traj.steps.size(); ++t) {
        const Transition& tr = traj.steps[t];
        if (!std::isfinite(tr.reward))
            throw std::invalid_argument("trajectory: non-finite reward at step " + std::to_string(t));
        if (tr.done && t + 1 != traj.steps.size())
            throw std::invalid_argument("trajectory: done before the final transition");
        if (t + 1 < traj.steps.size() && tr.next_state != traj.steps[t + 1].state)
            throw std::invalid_argument("trajectory: states do not chain at step " + std::to_string(t));
    }
}

} // namespace hfrlab
