#include "abacus/fingers.hpp"

#include "abacus/error.hpp"

#include <algorithm>

namespace abacus {

namespace {

int popcount(const std::array<bool, 10>& flags, int first) {
  return static_cast<int>(std::count(flags.begin() + first, flags.begin() + first + 5, true));
}

// Raised flags on one hand form a prefix in the given finger order.
bool is_prefix(const std::array<bool, 10>& flags, int hand, bool from_thumb) {
  bool gap = false;
  for (int i = 0; i < 5; ++i) {
    const int finger = hand * 5 + (from_thumb ? i : 4 - i);
    if (!flags[static_cast<std::size_t>(finger)]) {
      gap = true;
    } else if (gap) {
      return false;
    }
  }
  return true;
}

std::string render(int value, const std::vector<std::vector<Term>>& hands) {
  std::string body;
  std::size_t terms = 0;
  for (std::size_t h = 0; h < hands.size(); ++h) {
    if (h) body += '+';
    std::string part;
    for (std::size_t i = 0; i < hands[h].size(); ++i) {
      if (i) part += '+';
      part += hands[h][i].render();
    }
    terms += hands[h].size();
    body += (hands.size() > 1 && hands[h].size() > 1) ? "(" + part + ")" : part;
  }
  if (terms <= 1) return std::to_string(value);
  return std::to_string(value) + "=" + body;
}

std::vector<std::vector<Term>> chambaa_hands(int n) {
  const auto a = Term::atom;
  switch (n) {
    case 4: return {{a(2), a(2)}};
    case 6: return {{a(3)}, {a(3)}};
    case 7: return {{a(2), a(2)}, {a(3)}};
    case 8: return {{a(2), a(2)}, {a(2), a(2)}};
  }
  return {};
}

}  // namespace

bool HandShape::valid() const {
  if (left < 0 || left > 5 || right < 0 || right > 5) return false;
  if (fingers) return popcount(*fingers, 0) == left && popcount(*fingers, 5) == right;
  return true;
}

std::string_view to_string(FingerSystemName name) {
  switch (name) {
    case FingerSystemName::FrenchStandard: return "FRENCH_STANDARD";
    case FingerSystemName::Chambaa: return "CHAMBAA";
    case FingerSystemName::Makonde: return "MAKONDE";
  }
  return "?";
}

FingerSystemName parse_finger_system(std::string_view name) {
  for (auto s : {FingerSystemName::FrenchStandard, FingerSystemName::Chambaa, FingerSystemName::Makonde}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError(ErrorCode::InvalidArgument, "unknown finger system: " + std::string(name));
}

const FingerSystem& finger_system(FingerSystemName name) {
  static const FingerSystem systems[] = {
      {FingerSystemName::FrenchStandard,
       {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
       "one hand up to five starting at the thumb, then a full hand and the rest on the other"},
      {FingerSystemName::Chambaa,
       {4, 6, 7, 8},
       "fingers grouped in twos and threes: 4=2+2 on one hand, 6=3+3, 7=(2+2)+3, 8=(2+2)+(2+2)"},
      {FingerSystemName::Makonde,
       {1, 2, 3, 4},
       "two hands; the number is the count of folded fingers, starting at the little finger"},
  };
  return systems[static_cast<int>(name)];
}

std::vector<std::pair<int, int>> enumerate_hand_decompositions(int n) {
  if (n < 0 || n > 10) {
    throw DomainError(ErrorCode::OutOfRange, "two hands show 0 to 10, not " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> out;
  for (int left = std::max(0, n - 5); left <= std::min(5, n); ++left) out.emplace_back(left, n - left);
  return out;
}

FingerDecomposition cultural_decomposition(int n, FingerSystemName system) {
  const FingerSystem& s = finger_system(system);
  if (!s.supported_values.contains(n)) {
    throw DomainError(ErrorCode::UnsupportedValue,
                      std::string(to_string(system)) + " has no form for " + std::to_string(n));
  }
  FingerDecomposition d{system, n, {}, {}};
  switch (system) {
    case FingerSystemName::FrenchStandard:
      if (n <= 5) {
        d.hands = {{Term::atom(n)}};
      } else {
        d.hands = {{Term::atom(5)}, {Term::atom(n - 5)}};
      }
      break;
    case FingerSystemName::Chambaa:
      d.hands = chambaa_hands(n);
      break;
    case FingerSystemName::Makonde:
      d.hands = {{Term::atom(n)}};
      break;
  }
  d.formula = render(n, d.hands);
  return d;
}

bool follows_convention(const HandShape& shape, FingerSystemName system) {
  if (!shape.valid() || !shape.fingers) return false;
  const auto& flags = *shape.fingers;
  switch (system) {
    case FingerSystemName::FrenchStandard: {
      if (!is_prefix(flags, 0, true) || !is_prefix(flags, 1, true)) return false;
      const int first = std::max(shape.left, shape.right);
      const int second = std::min(shape.left, shape.right);
      return second == 0 || first == 5;
    }
    case FingerSystemName::Makonde: {
      // Little finger of the left hand first, then inward, then the right hand.
      if (shape.right > 0 && shape.left < 5) return false;
      return is_prefix(flags, 0, false) && is_prefix(flags, 1, false);
    }
    case FingerSystemName::Chambaa: {
      const auto hands = chambaa_hands(shape.total());
      if (hands.empty()) return false;
      std::vector<int> expected;
      for (const auto& h : hands) expected.push_back(static_cast<int>(terms_value(h)));
      std::vector<int> actual;
      if (shape.left) actual.push_back(shape.left);
      if (shape.right) actual.push_back(shape.right);
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      return expected == actual;
    }
  }
  return false;
}

}  // namespace abacus
