#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "streamlet/detail/emitters.hpp"
#include "streamlet/errors.hpp"
#include "streamlet/functional.hpp"
#include "streamlet/parallel.hpp"

namespace streamlet {

/// Whether terminal operations run on one thread in encounter order, or
/// fan out over chunked workers. Every pipeline starts sequential.
enum class ExecutionMode { sequential, parallel };

namespace detail {

// Shared along a chain of pipeline handles: `p.filter(f).map(g)` yields
// three handles over one state, so consuming any of them consumes all.
struct StreamState {
    ExecutionMode mode = ExecutionMode::sequential;
    bool consumed = false;
    std::optional<int> worker_override;

    void require_open() const {
        if (consumed) throw AlreadyConsumedError();
    }

    void mark_consumed() {
        require_open();
        consumed = true;
    }

    int resolve_workers() const {
        return worker_override.value_or(default_worker_count());
    }
};

using StreamStatePtr = std::shared_ptr<StreamState>;

struct PipelineAccess;

}  // namespace detail

/// A lazily evaluated pipeline: a source, the intermediate stages chained
/// onto it, an execution mode, and a consumed flag. Nothing is read from
/// the source and no stage function runs until a terminal operation
/// (count, sum, for_each, reduce) is invoked; that operation consumes the
/// pipeline, and any further use throws AlreadyConsumedError.
///
/// Intermediate operations return a new handle sharing the same state, so
/// both the compact dot-chained form and named intermediate variables
/// behave identically.
template <typename T>
class Pipeline {
  public:
    using value_type = T;
    /// Integer elements accumulate in 64-bit integers, reals in double.
    using sum_type = std::conditional_t<std::is_integral_v<T>, std::int64_t, double>;

    /// Switches the pipeline to parallel mode. Idempotent; everything else
    /// is unchanged, and results of count/sum over pure stages never
    /// depend on the mode.
    Pipeline parallel() {
        state_->require_open();
        state_->mode = ExecutionMode::parallel;
        return *this;
    }

    /// Switches back to sequential mode (the default). The last mode call
    /// before the terminal operation wins.
    Pipeline sequential() {
        state_->require_open();
        state_->mode = ExecutionMode::sequential;
        return *this;
    }

    /// Overrides the worker count used by parallel terminals. Defaults to
    /// the hardware's available parallelism.
    Pipeline workers(int count) {
        state_->require_open();
        if (count < 1) throw std::invalid_argument("worker count must be >= 1");
        state_->worker_override = count;
        return *this;
    }

    ExecutionMode mode() const { return state_->mode; }
    bool consumed() const { return state_->consumed; }

    /// Keeps the elements for which pred returns true, preserving relative
    /// order in sequential mode.
    template <typename Pred>
    Pipeline filter(Pred pred) {
        state_->require_open();
        auto stage = std::make_shared<detail::FilterEmitter<T>>(
            emitter_, PredicateFn<T>(std::move(pred)));
        return Pipeline(state_, std::move(stage));
    }

    /// Transforms each element: x1, x2, ... becomes f(x1), f(x2), ...
    template <typename F>
    auto map(F fn) {
        using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
        state_->require_open();
        auto stage = std::make_shared<detail::MapEmitter<T, U>>(
            emitter_, MapperFn<T, U>(std::move(fn)));
        return Pipeline<U>(state_, std::move(stage));
    }

    /// Like map, but the mapper must return an integer, and the result is
    /// a numeric pipeline that supports sum().
    template <typename F>
    auto map_to_int(F fn) {
        using Raw = std::decay_t<std::invoke_result_t<F&, const T&>>;
        static_assert(std::is_integral_v<Raw>, "map_to_int mapper must return an integer");
        state_->require_open();
        MapperFn<T, std::int64_t> widened =
            [fn = std::move(fn)](const T& value) -> std::int64_t {
                return static_cast<std::int64_t>(fn(value));
            };
        auto stage = std::make_shared<detail::MapEmitter<T, std::int64_t>>(
            emitter_, std::move(widened));
        return Pipeline<std::int64_t>(state_, std::move(stage));
    }

    /// Number of elements surviving all stages. Terminal.
    std::int64_t count() {
        auto emitter = take_for_terminal();
        if (state_->mode == ExecutionMode::sequential) {
            std::int64_t n = 0;
            emitter->emit_all([&n](const T&) { ++n; });
            return n;
        }
        ChunkPlan plan = plan_chunks(emitter->prepare(), state_->resolve_workers());
        std::vector<std::int64_t> partials(plan.chunks.size(), 0);
        run_chunked(plan, [&](std::size_t chunk, ChunkRange range) {
            std::int64_t n = 0;
            emitter->emit_range(range, [&n](const T&) { ++n; });
            partials[chunk] = n;
        });
        return merge_partials(partials);
    }

    /// Sum of the surviving elements, 0 for an empty stream. Terminal;
    /// numeric pipelines only. In parallel mode chunk sums are combined in
    /// chunk order, so floating results can differ from sequential ones by
    /// rounding only.
    sum_type sum() requires std::is_arithmetic_v<T> {
        auto emitter = take_for_terminal();
        if (state_->mode == ExecutionMode::sequential) {
            sum_type total{};
            emitter->emit_all([&total](const T& v) { total += static_cast<sum_type>(v); });
            return total;
        }
        ChunkPlan plan = plan_chunks(emitter->prepare(), state_->resolve_workers());
        std::vector<sum_type> partials(plan.chunks.size(), sum_type{});
        run_chunked(plan, [&](std::size_t chunk, ChunkRange range) {
            sum_type total{};
            emitter->emit_range(range, [&total](const T& v) { total += static_cast<sum_type>(v); });
            partials[chunk] = total;
        });
        return merge_partials(partials);
    }

    /// Invokes action once per surviving element. Terminal. Sequential
    /// mode preserves encounter order; parallel mode invokes the action
    /// concurrently from several workers in unspecified order, so the
    /// action must tolerate that.
    template <typename Action>
    void for_each(Action action) {
        ConsumerFn<T> consumer(std::move(action));
        auto emitter = take_for_terminal();
        if (state_->mode == ExecutionMode::sequential) {
            emitter->emit_all(consumer);
            return;
        }
        ChunkPlan plan = plan_chunks(emitter->prepare(), state_->resolve_workers());
        run_chunked(plan, [&](std::size_t, ChunkRange range) {
            emitter->emit_range(range, consumer);
        });
    }

    /// Folds the accumulator over the stream: result = acc(...acc(acc(
    /// initial, x1), x2)..., xn). Terminal. reduce always runs
    /// sequentially, even on a pipeline in parallel mode: the two-argument
    /// accumulator has no combiner for partial results, and silently
    /// requiring associativity would miscompute for perfectly reasonable
    /// accumulators.
    template <typename R, typename Acc>
    R reduce(R initial, Acc acc) {
        AccumulatorFn<R, T> accumulate(std::move(acc));
        auto emitter = take_for_terminal();
        R result = std::move(initial);
        emitter->emit_all([&](const T& value) { result = accumulate(std::move(result), value); });
        return result;
    }

  private:
    template <typename>
    friend class Pipeline;
    friend struct detail::PipelineAccess;

    Pipeline(detail::StreamStatePtr state, detail::EmitterPtr<T> emitter)
        : state_(std::move(state)), emitter_(std::move(emitter)) {}

    detail::EmitterPtr<T> take_for_terminal() {
        state_->mark_consumed();
        return emitter_;
    }

    detail::StreamStatePtr state_;
    detail::EmitterPtr<T> emitter_;
};

/// Numeric pipelines: the element type is fixed to a machine numeric type
/// and sum() becomes available.
using IntPipeline = Pipeline<std::int64_t>;
using DoublePipeline = Pipeline<double>;

namespace detail {

struct PipelineAccess {
    template <typename T>
    static Pipeline<T> make(EmitterPtr<T> emitter) {
        return Pipeline<T>(std::make_shared<StreamState>(), std::move(emitter));
    }
};

}  // namespace detail
}  // namespace streamlet
