#include "abacus/verbalizer.hpp"

#include "abacus/error.hpp"
#include "lexicon_data.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace abacus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty() || v < 0) {
    throw DomainError(ErrorCode::InvalidSpec, "bad number in lexicon: '" + std::string(s) + "'");
  }
  return v;
}

bool is_power_of_ten(std::int64_t v, std::size_t& exponent) {
  exponent = 0;
  if (v <= 0) return false;
  while (v % 10 == 0) {
    v /= 10;
    ++exponent;
  }
  return v == 1;
}

}  // namespace

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::English: return "ENGLISH";
    case Language::French: return "FRENCH";
    case Language::Maori: return "MAORI";
    case Language::Breton: return "BRETON";
  }
  return "?";
}

Language parse_language(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(c >= 'a' && c <= 'z' ? c - 32 : c);
  if (upper == "ENGLISH" || upper == "EN") return Language::English;
  if (upper == "FRENCH" || upper == "FR") return Language::French;
  if (upper == "MAORI" || upper == "MI") return Language::Maori;
  if (upper == "BRETON" || upper == "BR") return Language::Breton;
  throw DomainError(ErrorCode::InvalidArgument, "unknown language: " + std::string(name));
}

std::string Term::render() const {
  if (!base) return std::to_string(factor);
  return std::to_string(factor) + "×" + std::to_string(*base);
}

std::int64_t terms_value(const std::vector<Term>& terms) {
  std::int64_t sum = 0;
  for (const auto& t : terms) sum += t.value();
  return sum;
}

std::string terms_formula(std::int64_t value, const std::vector<Term>& terms) {
  if (terms.size() == 1 && !terms.front().base) return std::to_string(value);
  std::string out = std::to_string(value) + "=";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += '+';
    out += terms[i].render();
  }
  return out;
}

std::vector<Term> parse_terms(std::string_view text) {
  std::vector<Term> terms;
  while (true) {
    const auto plus = text.find('+');
    const std::string_view piece = trim(text.substr(0, plus));
    const auto star = piece.find('*');
    if (star == std::string_view::npos) {
      terms.push_back(Term::atom(parse_int(piece)));
    } else {
      terms.push_back(Term::product(parse_int(piece.substr(0, star)), parse_int(piece.substr(star + 1))));
    }
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return terms;
}

std::string normalize_words(std::string_view words) {
  std::string out;
  bool pending_space = false;
  for (char c : words) {
    if (c == '-' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
  }
  return out;
}

Lexicon Lexicon::parse(std::string_view text, Language lang) {
  Lexicon lex;
  lex.language_ = lang;
  std::map<std::int64_t, NumeralForm> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) {
      throw DomainError(ErrorCode::InvalidSpec,
                        "lexicon line " + std::to_string(line_no) + " needs three tab-separated fields");
    }
    NumeralForm form;
    form.value = parse_int(line.substr(0, tab1));
    form.language = lang;
    form.words = std::string(trim(line.substr(tab1 + 1, tab2 - tab1 - 1)));
    form.terms = parse_terms(line.substr(tab2 + 1));
    if (terms_value(form.terms) != form.value) {
      throw DomainError(ErrorCode::InvalidSpec, "lexicon line " + std::to_string(line_no) +
                                                    ": terms do not add up to " +
                                                    std::to_string(form.value));
    }
    form.formula = terms_formula(form.value, form.terms);
    const std::string key = normalize_words(form.words);
    if (!lex.by_words_.emplace(key, form.value).second) {
      throw DomainError(ErrorCode::InvalidSpec, "lexicon line " + std::to_string(line_no) +
                                                    ": words '" + form.words + "' used twice");
    }
    if (!entries.emplace(form.value, std::move(form)).second) {
      throw DomainError(ErrorCode::InvalidSpec,
                        "lexicon line " + std::to_string(line_no) + ": value listed twice");
    }
  }
  if (!entries.empty()) {
    lex.by_value_.resize(static_cast<std::size_t>(entries.rbegin()->first) + 1);
    for (auto& [v, form] : entries) lex.by_value_[static_cast<std::size_t>(v)] = std::move(form);
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path, Language lang) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(ErrorCode::NotFound, "cannot open lexicon " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), lang);
}

const Lexicon& Lexicon::builtin(Language lang) {
  static const Lexicon tables[] = {
      parse(detail::builtin_lexicon_text(Language::English), Language::English),
      parse(detail::builtin_lexicon_text(Language::French), Language::French),
      parse(detail::builtin_lexicon_text(Language::Maori), Language::Maori),
      parse(detail::builtin_lexicon_text(Language::Breton), Language::Breton),
  };
  return tables[static_cast<int>(lang)];
}

std::int64_t Lexicon::max_value() const noexcept {
  return static_cast<std::int64_t>(by_value_.size()) - 1;
}

NumeralForm Lexicon::say(const Natural& n) const {
  if (n < 0 || n >= by_value_.size() || !by_value_[static_cast<std::size_t>(n)]) {
    throw DomainError(ErrorCode::OutOfSupportedRange,
                      to_decimal(n) + " has no " + std::string(to_string(language_)) + " entry");
  }
  return *by_value_[static_cast<std::size_t>(n)];
}

std::int64_t Lexicon::parse_words(std::string_view words) const {
  const auto it = by_words_.find(normalize_words(words));
  if (it == by_words_.end()) {
    throw DomainError(ErrorCode::UnparsableWords,
                      "'" + std::string(words) + "' is not a " + std::string(to_string(language_)) +
                          " number in the supported range");
  }
  return it->second;
}

NumeralForm say(const Natural& n, Language lang) { return Lexicon::builtin(lang).say(n); }

std::int64_t parse_words(std::string_view words, Language lang) {
  return Lexicon::builtin(lang).parse_words(words);
}

AbacusConfig oral_to_abacus_hint(const NumeralForm& form, std::size_t rod_count) {
  std::map<std::size_t, std::int64_t> rod_totals;
  for (const Term& t : form.terms) {
    if (t.value() == 0) continue;
    std::size_t rank = 0;
    std::int64_t digit = 0;
    if (t.base) {
      if (!is_power_of_ten(*t.base, rank) || t.factor > kMaxRodValue) {
        throw DomainError(ErrorCode::NoMirrorInscription,
                          t.render() + " does not sit on a single rod");
      }
      digit = t.factor;
    } else {
      // Highest rank dividing the atom.
      std::int64_t v = t.factor;
      while (v % 10 == 0) {
        v /= 10;
        ++rank;
      }
      digit = v;
      if (digit > kMaxRodValue) {
        throw DomainError(ErrorCode::NoMirrorInscription, t.render() + " does not sit on a single rod");
      }
    }
    rod_totals[rank] += digit;
  }

  std::vector<RodState> rods(rod_count);
  for (const auto& [rank, total] : rod_totals) {
    if (total > kMaxRodValue) {
      throw DomainError(ErrorCode::NoMirrorInscription,
                        "rod " + std::to_string(rank) + " would need value " + std::to_string(total));
    }
    if (rank >= rod_count) {
      throw DomainError(ErrorCode::Overflow, "term needs rod " + std::to_string(rank));
    }
    const int upper = std::min<int>(kUpperBeads, static_cast<int>(total) / 5);
    rods[rank] = RodState{static_cast<int>(total) - 5 * upper, upper};
  }
  return AbacusConfig(std::move(rods));
}

}  // namespace abacus
