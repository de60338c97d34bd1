#pragma once

#include "abacus/verbalizer.hpp"

#include <string_view>

namespace abacus::detail {

// Contents of data/lexicon/*.tsv, embedded at configure time.
std::string_view builtin_lexicon_text(Language lang);

}  // namespace abacus::detail
