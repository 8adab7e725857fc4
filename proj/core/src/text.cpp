#include "condor/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace condor {

namespace {

bool is_space_byte(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

char ascii_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

}  // namespace

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space_byte(text[begin])) ++begin;
  while (end > begin && is_space_byte(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

std::string normalize_label(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  bool pending_space = false;
  for (char c : trim(label)) {
    if (is_space_byte(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) {
      out.push_back(' ');
    }
    pending_space = false;
    out.push_back(ascii_lower(c));
  }
  return out;
}

char32_t decode_utf8(std::string_view text, std::size_t& offset) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(offset);
  std::size_t len = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    offset += 1;
    return lead;
  } else if ((lead >> 5) == 0x6) {
    len = 2;
    cp = lead & 0x1f;
  } else if ((lead >> 4) == 0xe) {
    len = 3;
    cp = lead & 0x0f;
  } else if ((lead >> 3) == 0x1e) {
    len = 4;
    cp = lead & 0x07;
  } else {
    offset += 1;
    return 0xFFFD;
  }
  if (offset + len > text.size()) {
    offset += 1;
    return 0xFFFD;
  }
  for (std::size_t i = 1; i < len; ++i) {
    unsigned char cont = byte(offset + i);
    if ((cont >> 6) != 0x2) {
      offset += 1;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cont & 0x3f);
  }
  offset += len;
  return cp;
}

bool is_cjk(char32_t cp) {
  return (cp >= 0x4e00 && cp <= 0x9fff) ||    // CJK unified
         (cp >= 0x3400 && cp <= 0x4dbf) ||    // extension A
         (cp >= 0xf900 && cp <= 0xfaff) ||    // compatibility ideographs
         (cp >= 0x3040 && cp <= 0x30ff);      // kana
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t offset = 0;
  const auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  while (offset < text.size()) {
    char32_t cp = decode_utf8(text, offset);
    if (cp < 0x80 && is_space_byte(static_cast<char>(cp))) {
      flush();
      continue;
    }
    if (is_cjk(cp)) {
      flush();
      std::string one;
      append_utf8(one, cp);
      tokens.push_back(std::move(one));
      continue;
    }
    if (cp < 0x80) {
      current.push_back(ascii_lower(static_cast<char>(cp)));
    } else {
      append_utf8(current, cp);
    }
  }
  flush();
  return tokens;
}

std::size_t word_count(std::string_view text) {
  return tokenize(text).size();
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t n = 0;
  std::size_t offset = 0;
  while (offset < text.size()) {
    decode_utf8(text, offset);
    ++n;
  }
  return n;
}

double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::unordered_set<std::string> sa(a.begin(), a.end());
  std::unordered_set<std::string> sb(b.begin(), b.end());
  std::size_t inter = 0;
  for (const auto& t : sa) {
    inter += sb.count(t);
  }
  std::size_t uni = sa.size() + sb.size() - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace condor
