#pragma once

// streamlet: lazy stream pipelines with sequential and parallel execution.

#include "streamlet/bench.hpp"
#include "streamlet/errors.hpp"
#include "streamlet/exact_decimal.hpp"
#include "streamlet/functional.hpp"
#include "streamlet/parallel.hpp"
#include "streamlet/pipeline.hpp"
#include "streamlet/sources.hpp"
