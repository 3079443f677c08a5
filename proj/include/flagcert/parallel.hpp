#ifndef FLAGCERT_PARALLEL_HPP
#define FLAGCERT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace flagcert {

// Worker cap for parallel_for; 0 restores the hardware default. Results of
// all parallel loops are merged deterministically, so the count never
// changes any output.
void set_thread_count(int threads);
int thread_count();

// Runs fn(0..count-1) across the worker pool; exceptions propagate.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace flagcert

#endif
