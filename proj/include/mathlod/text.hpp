#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mathlod/error.hpp"

namespace mathlod::text {

/// Decodes UTF-8; malformed bytes map to U+FFFD one byte at a time.
inline std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    auto b = static_cast<unsigned char>(s[i]);
    std::size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : (b >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    char32_t cp = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      auto c = static_cast<unsigned char>(s[i + k]);
      if ((c >> 6) != 0x2) ok = false;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

/// Lowercases ASCII, Latin-1 letters and basic Cyrillic.
inline char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  return c;
}

inline std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t c : decode_utf8(s)) append_utf8(out, to_lower(c));
  return out;
}

inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
         c == 0xA0 || c == 0x2009 || c == 0x202F || c == 0x3000;
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char32_t c : decode_utf8(s)) {
    if (is_space(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      append_utf8(cur, c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline bool iequals(std::string_view a, std::string_view b) { return lowercase(a) == lowercase(b); }

/// Whitespace tokenization where "double quoted spans" form one token.
inline std::vector<std::string> tokenize_phrase(std::string_view phrase) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < phrase.size()) {
    char c = phrase[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '"') {
      auto close = phrase.find('"', i + 1);
      if (close == std::string_view::npos) throw ParseError("unterminated quote in phrase", 0, i + 1);
      out.emplace_back(phrase.substr(i + 1, close - i - 1));
      i = close + 1;
      continue;
    }
    std::size_t start = i;
    while (i < phrase.size() && phrase[i] != ' ' && phrase[i] != '\t' && phrase[i] != '\n' &&
           phrase[i] != '\r')
      ++i;
    out.emplace_back(phrase.substr(start, i - start));
  }
  return out;
}

/// Inverse of tokenize_phrase for tokens without embedded quotes.
inline std::string join_phrase(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    bool quote = t.empty() || t.find_first_of(" \t\n\r") != std::string::npos;
    out += quote ? "\"" + t + "\"" : t;
  }
  return out;
}

/// One entry per non-empty line; `#` starts a comment line.
inline std::vector<std::string> read_lines(std::string_view content) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string line(content.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') {
      auto last = line.find_last_not_of(" \t");
      out.push_back(line.substr(first, last - first + 1));
    }
    if (end == content.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace mathlod::text
