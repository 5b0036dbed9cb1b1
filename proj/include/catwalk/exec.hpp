#pragma once

namespace catwalk {

// Execution policy for the data-parallel kernels. Results are identical in
// both modes: all per-item work writes to disjoint slots and the ring
// operations are exact, so the policy only selects threading.
enum class Exec {
    serial,
    parallel,
};

} // namespace catwalk
