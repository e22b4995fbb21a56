#include "lexind/text.h"

#include <charconv>
#include <cctype>
#include <cstdint>
#include <fstream>

#include "lexind/error.h"

namespace lexind {
namespace {

// Decodes one UTF-8 sequence starting at `pos`; invalid bytes decode as
// themselves with length 1.
char32_t DecodeAt(std::string_view s, std::size_t pos, std::size_t* len) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  int extra = 0;
  char32_t cp = b0;
  if (b0 >= 0xF0 && b0 < 0xF8) {
    extra = 3;
    cp = b0 & 0x07;
  } else if (b0 >= 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  }
  if (b0 >= 0xF8 || (b0 >= 0x80 && b0 < 0xC0)) {
    *len = 1;
    return b0;
  }
  for (int i = 1; i <= extra; ++i) {
    if (pos + i >= s.size()) {
      *len = 1;
      return b0;
    }
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      *len = 1;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  *len = static_cast<std::size_t>(extra) + 1;
  return cp;
}

bool IsLetterCodePoint(char32_t cp) {
  if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
  if (cp < 0xC0) return false;                       // Latin-1 punctuation, symbols
  if (cp == 0xD7 || cp == 0xF7) return false;        // multiplication, division
  if (cp >= 0x0660 && cp <= 0x066D) return false;    // Arabic-Indic digits, punctuation
  if (cp >= 0x06F0 && cp <= 0x06F9) return false;    // Persian digits
  if (cp == 0x060C || cp == 0x061B || cp == 0x061F || cp == 0x06D4) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;    // punctuation, symbols, arrows
  if (cp >= 0x3000 && cp <= 0x303F) return false;    // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF20) return false;    // fullwidth ASCII punctuation
  if (cp >= 0xFFF0) return false;
  return true;
}

}  // namespace

bool HasLetter(std::string_view token) {
  for (std::size_t pos = 0; pos < token.size();) {
    std::size_t len = 1;
    if (IsLetterCodePoint(DecodeAt(token, pos, &len))) return true;
    pos += len;
  }
  return false;
}

std::string KeepLetters(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t pos = 0; pos < token.size();) {
    std::size_t len = 1;
    if (IsLetterCodePoint(DecodeAt(token, pos, &len))) out.append(token.substr(pos, len));
    pos += len;
  }
  return out;
}

std::vector<std::string_view> SplitWords(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == sep) ++pos;
    if (pos == line.size()) break;
    std::size_t end = line.find(sep, pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = line.find(sep, pos);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::string_view StripLineEnd(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

WordSet LoadWordSet(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list: " + path);
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    for (auto w : SplitWords(StripLineEnd(line))) words.emplace(w);
  }
  if (in.bad()) throw IoError("read failed: " + path);
  return words;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

}  // namespace lexind
