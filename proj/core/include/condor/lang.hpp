#pragma once

#include <string_view>

namespace condor {

enum class Lang { Zh, En };

std::string_view lang_id(Lang lang);

Lang parse_lang(std::string_view text);

}  // namespace condor
