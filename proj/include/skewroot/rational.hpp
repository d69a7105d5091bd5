// Copyright 2026 The skewroot authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skw {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) after every canonicalize().
using Rat = mpq_class;

// Canonical text form "p/q", lowest terms, q > 0. Integers still carry the
// "/1" so the grammar stays regular ("-3/1", "0/1").
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" with optional leading '-' on p; q > 0 after
// canonicalization. Throws ParseError otherwise.
Rat rat_parse(std::string_view s);

}  // namespace skw
