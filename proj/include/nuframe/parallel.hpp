#pragma once

#include <cstddef>
#include <functional>

namespace nuframe {

/// Worker count: `requested` if positive, else NUFRAME_THREADS if set and positive,
/// else hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Calls body(i) for i in [0, count) over contiguous chunks. Callers write results by index,
/// so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace nuframe
