// Copyright 2026 The ordembed Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace ordembed {

/// Natural numbers as carriers of orders, sequent members and tree indices.
using Nat = std::uint64_t;

}  // namespace ordembed
