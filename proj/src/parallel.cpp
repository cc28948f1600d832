#include "streamlet/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <thread>

namespace streamlet {

int default_worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ChunkPlan plan_chunks(std::int64_t n_elements, int workers) {
    assert(n_elements >= 0);
    assert(workers >= 1);

    std::int64_t chunk_count =
        std::min<std::int64_t>(static_cast<std::int64_t>(workers) * 4,
                               std::max<std::int64_t>(1, n_elements));

    ChunkPlan plan;
    plan.worker_count = workers;
    plan.chunks.reserve(static_cast<std::size_t>(chunk_count));

    std::int64_t base = n_elements / chunk_count;
    std::int64_t remainder = n_elements % chunk_count;
    std::int64_t cursor = 0;
    for (std::int64_t i = 0; i < chunk_count; ++i) {
        std::int64_t size = base + (i < remainder ? 1 : 0);
        plan.chunks.push_back({cursor, cursor + size});
        cursor += size;
    }
    return plan;
}

void run_chunked(const ChunkPlan& plan,
                 const std::function<void(std::size_t, ChunkRange)>& process) {
    const std::size_t chunk_count = plan.chunks.size();
    if (chunk_count == 0) return;

    int threads = std::min<int>(plan.worker_count, static_cast<int>(chunk_count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < chunk_count; ++i) process(i, plan.chunks[i]);
        return;
    }

    std::atomic<std::size_t> next_chunk{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (i >= chunk_count) break;
            try {
                process(i, plan.chunks[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace streamlet
