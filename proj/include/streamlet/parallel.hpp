#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace streamlet {

/// Half-open slice [begin, end) of a materialized source.
struct ChunkRange {
    std::int64_t begin = 0;
    std::int64_t end = 0;

    std::int64_t size() const { return end - begin; }
    friend bool operator==(const ChunkRange&, const ChunkRange&) = default;
};

/// Partition of [0, n) into ordered, disjoint chunks plus the worker count
/// the plan was made for. A 1-worker plan behaves exactly like sequential
/// execution.
struct ChunkPlan {
    int worker_count = 1;
    std::vector<ChunkRange> chunks;
};

/// Hardware parallelism, clamped to at least 1.
int default_worker_count();

/// Splits n_elements into min(workers * 4, max(1, n_elements)) chunks of
/// near-equal size (the first chunks are at most one element larger).
/// Over-decomposing by 4x lets workers that finish cheap chunks pick up
/// remaining ones, which matters for workloads whose per-element cost
/// varies. n_elements == 0 yields a single empty chunk.
ChunkPlan plan_chunks(std::int64_t n_elements, int workers);

/// Runs process(chunk_index, range) once per chunk on the plan's workers.
/// Chunks are handed out dynamically in order. The first exception wins:
/// it is rethrown here once all workers have stopped, and remaining chunks
/// are abandoned cooperatively.
void run_chunked(const ChunkPlan& plan,
                 const std::function<void(std::size_t, ChunkRange)>& process);

/// Merges per-chunk partial results in chunk order. Counts and sums merge
/// by addition; this fixed order keeps floating-point merges deterministic
/// for a given plan.
template <typename N>
N merge_partials(const std::vector<N>& partials) {
    N total{};
    for (const N& p : partials) total += p;
    return total;
}

}  // namespace streamlet
