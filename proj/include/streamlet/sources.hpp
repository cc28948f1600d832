#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <memory>
#include <ranges>
#include <string>
#include <type_traits>
#include <vector>

#include "streamlet/pipeline.hpp"

namespace streamlet {

/// Pipeline over an explicit list of values, in list order.
template <typename T>
Pipeline<T> of(std::vector<T> values) {
    return detail::PipelineAccess::make<T>(
        std::make_shared<detail::LiteralEmitter<T>>(std::move(values)));
}

template <typename T>
Pipeline<std::decay_t<T>> of(std::initializer_list<T> values) {
    return of(std::vector<std::decay_t<T>>(values.begin(), values.end()));
}

/// String literals become std::string elements.
inline Pipeline<std::string> of(std::initializer_list<const char*> values) {
    return of(std::vector<std::string>(values.begin(), values.end()));
}

/// Pipeline viewing an existing container in its iteration order. The
/// container must outlive consumption and stay unmodified until then.
template <std::ranges::input_range C>
Pipeline<std::ranges::range_value_t<C>> from_collection(const C& container) {
    using T = std::ranges::range_value_t<C>;
    return detail::PipelineAccess::make<T>(
        std::make_shared<detail::CollectionEmitter<C>>(container));
}

/// Pipeline over the lines of a UTF-8 text file, in file order, line
/// terminators ("\n" or "\r\n") stripped. A trailing terminator does not
/// produce an empty final line. Throws FileError if the file cannot be
/// opened; read and decode errors surface when the pipeline is consumed.
inline Pipeline<std::string> lines(const std::filesystem::path& path) {
    return detail::PipelineAccess::make<std::string>(detail::open_file_lines(path));
}

/// Numeric pipeline over lo, lo+1, ..., hi-1; empty when lo >= hi.
inline Pipeline<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    std::int64_t count = lo < hi ? hi - lo : 0;
    return detail::PipelineAccess::make<std::int64_t>(
        std::make_shared<detail::RangeEmitter>(lo, count));
}

/// Numeric pipeline over lo, lo+1, ..., hi; empty when lo > hi.
inline Pipeline<std::int64_t> range_closed(std::int64_t lo, std::int64_t hi) {
    std::int64_t count = lo <= hi ? hi - lo + 1 : 0;
    return detail::PipelineAccess::make<std::int64_t>(
        std::make_shared<detail::RangeEmitter>(lo, count));
}

}  // namespace streamlet
