#ifndef LEXIND_TEXT_H_
#define LEXIND_TEXT_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lexind {

using WordSet = std::unordered_set<std::string>;

// True if `token` holds at least one letter. ASCII letters count, as does any
// non-ASCII code point outside the punctuation, symbol and digit blocks
// (Arabic-Indic and Persian digits are digits, not letters).
bool HasLetter(std::string_view token);

// Removes every code point that is not a letter in the HasLetter sense.
std::string KeepLetters(std::string_view token);

// Splits on runs of `sep`; empty fields are dropped.
std::vector<std::string_view> SplitWords(std::string_view line, char sep = ' ');

// Splits on every `sep`; empty fields are kept.
std::vector<std::string_view> SplitFields(std::string_view line, char sep = '\t');

std::string_view StripLineEnd(std::string_view line);

// One word per line; blank lines ignored. Throws IoError.
WordSet LoadWordSet(const std::string& path);

// Shortest decimal text that round-trips to the same double.
std::string FormatDouble(double value);

}  // namespace lexind

#endif  // LEXIND_TEXT_H_
