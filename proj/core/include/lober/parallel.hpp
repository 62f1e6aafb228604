#pragma once

#include <cstddef>
#include <functional>

namespace lober::parallel {

/// Number of worker threads used by the library. Defaults to the hardware
/// concurrency. Results never depend on this value: work is split into
/// fixed-size chunks and combined in chunk order.
unsigned worker_count();
void set_worker_count(unsigned workers);

/// Chunk size used by callers that split index ranges.
inline constexpr std::size_t kChunk = 8192;

inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

/// Calls fn(c) once for every c in [0, n_chunks). The first exception thrown
/// by any call is rethrown on the calling thread.
void for_each_chunk(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

}  // namespace lober::parallel
