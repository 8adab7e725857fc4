#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace condor {

std::string_view trim(std::string_view text);

// Label equality used for sibling dedup across tag sources: ASCII case-fold
// plus internal whitespace collapsed to single spaces. Inputs are expected to
// be NFC-normalized UTF-8 (the bundled seed data is).
std::string normalize_label(std::string_view label);

// Splits into whitespace-delimited words; runs of CJK characters are further
// exploded into one token per character so Chinese labels compare sensibly.
std::vector<std::string> tokenize(std::string_view text);

std::size_t word_count(std::string_view text);

std::size_t codepoint_count(std::string_view text);

// Jaccard overlap of the two token multisets treated as sets.
double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Decodes the UTF-8 codepoint starting at `offset`, advancing it. Invalid
// bytes decode as U+FFFD one byte at a time, so iteration always terminates.
char32_t decode_utf8(std::string_view text, std::size_t& offset);

bool is_cjk(char32_t cp);

}  // namespace condor
