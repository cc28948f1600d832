#pragma once

#include <functional>

namespace streamlet {

// The four function-value roles used throughout the library. All of them
// are plain callables: anything convertible to the matching std::function
// (lambdas, named functions, function objects) works. Stage functions are
// expected to be deterministic for the duration of one pipeline execution;
// in parallel mode they are invoked concurrently from several workers and
// the library never mutates them.

/// T -> bool. Decides whether an element survives a filter stage.
template <typename T>
using PredicateFn = std::function<bool(const T&)>;

/// T -> U. Transforms one element into one element.
template <typename T, typename U>
using MapperFn = std::function<U(const T&)>;

/// (result so far, new element) -> updated result. Drives reduce().
template <typename R, typename T>
using AccumulatorFn = std::function<R(R, const T&)>;

/// T -> void. May have side effects (typically output); used by for_each().
template <typename T>
using ConsumerFn = std::function<void(const T&)>;

/// (u, v, w) -> real. Three-argument variant used by apply3().
using TriMapperFn = std::function<double(double, double, double)>;

/// Applies a function value to an argument. Exists to demonstrate that
/// functions are ordinary values here: apply(f, x) == f(x), always.
inline int apply(const MapperFn<int, int>& f, int x) { return f(x); }

/// Three-argument counterpart of apply().
inline double apply3(const TriMapperFn& g, double u, double v, double w) { return g(u, v, w); }

}  // namespace streamlet
