#pragma once

#include "abacus/core.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace abacus {

enum class Language { English, French, Maori, Breton };

inline constexpr Language kAllLanguages[] = {Language::English, Language::French, Language::Maori,
                                             Language::Breton};

std::string_view to_string(Language lang);
/// Accepts ENGLISH/FRENCH/MAORI/BRETON or en/fr/mi/br, any case.
Language parse_language(std::string_view name);

/// atom(v), or product(factor, base) when `base` is set: 3*20 is three-twenty.
struct Term {
  std::int64_t factor = 0;
  std::optional<std::int64_t> base;

  static Term atom(std::int64_t v) { return Term{v, std::nullopt}; }
  static Term product(std::int64_t a, std::int64_t b) { return Term{a, b}; }

  std::int64_t value() const { return base ? factor * *base : factor; }
  std::string render() const;  // "13", "3×20"

  friend bool operator==(const Term&, const Term&) = default;
};

std::int64_t terms_value(const std::vector<Term>& terms);
/// "73=3+10+3×20"; a lone atom equal to the value renders as just "7".
std::string terms_formula(std::int64_t value, const std::vector<Term>& terms);
/// Parses "3 + 10 + 3*20" (the lexicon's terms column).
std::vector<Term> parse_terms(std::string_view text);

struct NumeralForm {
  std::int64_t value = 0;
  Language language = Language::English;
  std::string words;
  std::vector<Term> terms;
  std::string formula;

  friend bool operator==(const NumeralForm&, const NumeralForm&) = default;
};

/// Case-folds ASCII, treats hyphens and spaces alike, collapses blanks.
/// Diacritics and apostrophes are kept.
std::string normalize_words(std::string_view words);

/// Word table for one language, read from the line-oriented lexicon format.
class Lexicon {
 public:
  static Lexicon parse(std::string_view text, Language lang);
  static Lexicon load(const std::filesystem::path& path, Language lang);
  /// Compiled-in table, parsed on first use.
  static const Lexicon& builtin(Language lang);

  Language language() const noexcept { return language_; }
  std::int64_t max_value() const noexcept;

  NumeralForm say(const Natural& n) const;
  std::int64_t parse_words(std::string_view words) const;

 private:
  Language language_ = Language::English;
  std::vector<std::optional<NumeralForm>> by_value_;
  std::unordered_map<std::string, std::int64_t> by_words_;
};

/// Throws OutOfSupportedRange outside the lexicon's range (0..99).
NumeralForm say(const Natural& n, Language lang);

/// Throws UnparsableWords when no supported number has these words.
std::int64_t parse_words(std::string_view words, Language lang);

/// Inscription whose rods mirror the spoken decomposition: each term is
/// placed on one rod (an atom on the highest rank dividing it, a product
/// only when its base is a power of ten) and each rod shows its total with
/// as many five-unit counters as fit. French 73 = 60+13 gives tens 6 and
/// units 13. Throws NoMirrorInscription when a term has no rod or a rod
/// total exceeds 15.
AbacusConfig oral_to_abacus_hint(const NumeralForm& form, std::size_t rod_count = kDefaultRodCount);

}  // namespace abacus
