#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iterator>
#include <memory>
#include <ranges>
#include <utility>
#include <vector>

#include "streamlet/functional.hpp"
#include "streamlet/parallel.hpp"

namespace streamlet::detail {

template <typename T>
using Sink = std::function<void(const T&)>;

// A source plus the stages chained onto it. Each intermediate operation
// wraps the previous emitter, so stage order equals call order and the
// type flowing out of one stage is the type flowing into the next.
//
// Two consumption paths:
//   emit_all    - drive every element through the chain in encounter order
//                 (the sequential engine; file sources stream line by line).
//   prepare     - materialize or size the raw source, returning its element
//                 count so the parallel engine can plan chunks, then
//   emit_range  - drive a slice [begin, end) of raw source positions
//                 through the chain. Stage functions run inside whichever
//                 worker owns the slice.
//
// No stage function is invoked and no source element is read until one of
// the emit paths runs.
template <typename T>
class Emitter {
  public:
    virtual ~Emitter() = default;

    virtual std::int64_t prepare() = 0;
    virtual void emit_range(ChunkRange range, const Sink<T>& sink) = 0;
    virtual void emit_all(const Sink<T>& sink) = 0;
};

template <typename T>
using EmitterPtr = std::shared_ptr<Emitter<T>>;

// Owns its elements.
template <typename T>
class LiteralEmitter final : public Emitter<T> {
  public:
    explicit LiteralEmitter(std::vector<T> values) : values_(std::move(values)) {}

    std::int64_t prepare() override { return static_cast<std::int64_t>(values_.size()); }

    void emit_range(ChunkRange range, const Sink<T>& sink) override {
        for (std::int64_t i = range.begin; i < range.end; ++i) {
            sink(values_[static_cast<std::size_t>(i)]);
        }
    }

    void emit_all(const Sink<T>& sink) override {
        for (const T& v : values_) sink(v);
    }

  private:
    std::vector<T> values_;
};

// Views a caller-owned sequence; the sequence must outlive consumption.
// Random-access containers are sliced in place, anything else is copied
// into a buffer when the parallel engine asks for chunk addressing.
template <typename C>
class CollectionEmitter final : public Emitter<std::ranges::range_value_t<C>> {
  public:
    using value_type = std::ranges::range_value_t<C>;

    explicit CollectionEmitter(const C& container) : container_(&container) {}

    std::int64_t prepare() override {
        if constexpr (std::ranges::random_access_range<C>) {
            return static_cast<std::int64_t>(std::ranges::distance(*container_));
        } else {
            buffer_.assign(std::ranges::begin(*container_), std::ranges::end(*container_));
            return static_cast<std::int64_t>(buffer_.size());
        }
    }

    void emit_range(ChunkRange range, const Sink<value_type>& sink) override {
        if constexpr (std::ranges::random_access_range<C>) {
            auto it = std::ranges::begin(*container_) + range.begin;
            for (std::int64_t i = range.begin; i < range.end; ++i, ++it) sink(*it);
        } else {
            for (std::int64_t i = range.begin; i < range.end; ++i) {
                sink(buffer_[static_cast<std::size_t>(i)]);
            }
        }
    }

    void emit_all(const Sink<value_type>& sink) override {
        for (const auto& v : *container_) sink(v);
    }

  private:
    const C* container_;
    std::vector<value_type> buffer_;
};

// lo, lo+1, ..., lo+count-1. Chunks arithmetically, nothing materialized.
class RangeEmitter final : public Emitter<std::int64_t> {
  public:
    RangeEmitter(std::int64_t lo, std::int64_t count) : lo_(lo), count_(count) {}

    std::int64_t prepare() override { return count_; }

    void emit_range(ChunkRange range, const Sink<std::int64_t>& sink) override {
        for (std::int64_t i = range.begin; i < range.end; ++i) sink(lo_ + i);
    }

    void emit_all(const Sink<std::int64_t>& sink) override {
        emit_range({0, count_}, sink);
    }

  private:
    std::int64_t lo_;
    std::int64_t count_;
};

// Lines of a UTF-8 text file, terminators stripped. Opened at creation so
// open failures surface there; read and decode failures surface during
// consumption. The parallel engine materializes all lines up front and is
// the only reader.
EmitterPtr<std::string> open_file_lines(const std::filesystem::path& path);

template <typename T>
class FilterEmitter final : public Emitter<T> {
  public:
    FilterEmitter(EmitterPtr<T> inner, PredicateFn<T> pred)
        : inner_(std::move(inner)), pred_(std::move(pred)) {}

    std::int64_t prepare() override { return inner_->prepare(); }

    void emit_range(ChunkRange range, const Sink<T>& sink) override {
        inner_->emit_range(range, filtered(sink));
    }

    void emit_all(const Sink<T>& sink) override { inner_->emit_all(filtered(sink)); }

  private:
    Sink<T> filtered(const Sink<T>& sink) const {
        return [this, &sink](const T& value) {
            if (pred_(value)) sink(value);
        };
    }

    EmitterPtr<T> inner_;
    PredicateFn<T> pred_;
};

template <typename T, typename U>
class MapEmitter final : public Emitter<U> {
  public:
    MapEmitter(EmitterPtr<T> inner, MapperFn<T, U> fn)
        : inner_(std::move(inner)), fn_(std::move(fn)) {}

    std::int64_t prepare() override { return inner_->prepare(); }

    void emit_range(ChunkRange range, const Sink<U>& sink) override {
        inner_->emit_range(range, mapped(sink));
    }

    void emit_all(const Sink<U>& sink) override { inner_->emit_all(mapped(sink)); }

  private:
    Sink<T> mapped(const Sink<U>& sink) const {
        return [this, &sink](const T& value) { sink(fn_(value)); };
    }

    EmitterPtr<T> inner_;
    MapperFn<T, U> fn_;
};

}  // namespace streamlet::detail
