#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqsig/moves.hpp"

namespace eqsig {

/// Parses a move script: statements separated by ';', each one of
///
///   B  k=<int> sign=<+1|-1>
///   A1 k=<int> sign=<+1|-1> color=<unicolored|bicolored> [eps=<+1|-1>]
///   A2 i=<int> j=<int> sign=<+1|-1> color=<...> [eps=<+1|-1>] [mixed=<true|false>]
///   C  sign=<+1|-1> color=<unicolored|bicolored>
///
/// eps is required iff color=bicolored. Throws ScriptError with the offset of
/// the offending token. Index ranges are checked later against the form.
std::vector<MoveSpec> parse_move_script(std::string_view text);

/// Canonical single-statement text; parse_move_script(format_move(m)) == {m}.
std::string format_move(const MoveSpec& m);
std::string format_move_script(const std::vector<MoveSpec>& moves);

}  // namespace eqsig
