#ifndef WORDLOGIC_TEXT_HPP
#define WORDLOGIC_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the line-oriented file formats.
namespace wordlogic::text {

std::string_view trim(std::string_view s);

/// Splits on `sep`; an empty input yields no items.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits on `sep` occurrences outside (), [] and {} nesting.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

/// Splits on runs of whitespace.
std::vector<std::string_view> words(std::string_view s);

/// Lines of `s`, without terminators. Blank lines and `#` comments are kept
/// so callers can report line numbers.
std::vector<std::string_view> lines(std::string_view s);

bool is_blank_or_comment(std::string_view line);

std::size_t parse_size(std::string_view s);

std::string read_file(const std::string& path);

}  // namespace wordlogic::text

#endif  // WORDLOGIC_TEXT_HPP
