#pragma once

#include <cstddef>
#include <functional>

namespace tfloc {

/// Worker cap used by parallel_for. Defaults to TFLOC_THREADS when set,
/// otherwise the hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [begin, end). Each index is visited exactly once;
/// bodies must only write to state owned by their index.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace tfloc
