#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpathlen {

// Letters are positive integers over the unbounded alphabet {1,2,...}.
using Letter = std::uint64_t;
using Word = std::vector<Letter>;

// Comma-separated positive integers, e.g. "3,1,2". The empty string is the
// empty word. Throws std::invalid_argument on zero, negative or junk tokens.
Word parse_word(std::string_view csv);

std::string format_word(const Word& word);

}  // namespace qpathlen
