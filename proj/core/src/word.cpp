#include "qpathlen/word.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qpathlen {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Letter parse_letter(std::string_view token) {
  token = trim(token);
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("bad letter '" + std::string(token) + "'");
  if (value < 1) throw std::invalid_argument("letters must be >= 1");
  return value;
}

}  // namespace

Word parse_word(std::string_view csv) {
  Word word;
  if (trim(csv).empty()) return word;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string_view token =
        comma == std::string_view::npos ? csv.substr(start) : csv.substr(start, comma - start);
    word.push_back(parse_letter(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace qpathlen
