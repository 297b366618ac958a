#pragma once

#include <cstdint>
#include <functional>

namespace zetascan {

// Runs fn(0) .. fn(n-1) across up to `workers` threads (serial when
// workers <= 1). Each index is processed exactly once; writers own disjoint
// slots, so results cannot depend on the scheduling. The first exception
// thrown by fn is rethrown on the calling thread after all workers join.
void parallel_for_index(std::uint64_t n, int workers,
                        const std::function<void(std::uint64_t)>& fn);

}  // namespace zetascan
