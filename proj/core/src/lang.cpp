#include "condor/lang.hpp"

#include "condor/errors.hpp"
#include "condor/text.hpp"

namespace condor {

std::string_view lang_id(Lang lang) {
  return lang == Lang::Zh ? "zh" : "en";
}

Lang parse_lang(std::string_view text) {
  std::string norm = normalize_label(text);
  if (norm == "zh") return Lang::Zh;
  if (norm == "en") return Lang::En;
  raise(ErrorKind::Config, "unknown lang: " + std::string(text));
}

}  // namespace condor
