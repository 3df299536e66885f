// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_ORACLE_HPP
#define RSHACL_ORACLE_HPP

#include <vector>

#include "rshacl/eval.hpp"
#include "rshacl/schema.hpp"

namespace rshacl {

// Reference implementations for test cross-checks. Both sweep the whole
// candidate space with no pruning and deliberately avoid the fixpoint
// engine, so the two code paths can only agree by being right.

/// Every assignment reproducing itself under one simultaneous rule
/// application. Hard cap: shapes * domain <= 20.
std::vector<ShapeAssignment> oracle_supported(const Schema& schema,
                                              const Graph& g);

/// Every consistent pair whose bounds both rebuild themselves as least
/// fixpoints against the opposite bound. Hard cap: shapes * domain <= 12.
std::vector<PartialInterpretation> oracle_partial_stable(const Schema& schema,
                                                         const Graph& g);

}  // namespace rshacl

#endif  // RSHACL_ORACLE_HPP
