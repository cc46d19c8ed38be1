#pragma once

#include <functional>

namespace homog {

// Global worker cap for internally parallel sweeps (pair classification).
// Default is 1; the CLI raises it via --threads. Results are merged by
// index and do not depend on the cap.
int thread_cap();
void set_thread_cap(int cap);

// Runs f(begin, end) over [0, total) split into contiguous chunks.
void parallel_for(long long total, const std::function<void(long long, long long)>& f);

} // namespace homog
