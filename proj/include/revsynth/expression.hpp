// Copyright 2026 The revsynth authors
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

#include <string>
#include <string_view>
#include <vector>

#include "revsynth/truth_table.hpp"

namespace revsynth {

/// Builds the truth table of a Boolean expression.
///
/// Grammar:
///   expr   := term (('^' | '|') term)*
///   term   := factor ('&' factor)*
///   factor := '~' factor | '(' expr ')' | ident
/// with identifiers [a-z][a-z0-9]*. '&' binds tighter than '^' and '|',
/// which share a precedence level and associate left; '~' binds tightest.
///
/// Variable i maps to input index bit i. Without var_order, variables are
/// numbered by first occurrence in the text; with var_order, exactly those
/// names are allowed (unused ones still occupy a table variable).
///
/// Throws ParseError (with character position) on malformed input, unknown
/// variables under var_order, or more than 16 variables.
TruthTable parse_expression(std::string_view text);
TruthTable parse_expression(std::string_view text,
                            const std::vector<std::string>& var_order);

}  // namespace revsynth
