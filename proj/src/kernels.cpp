#include "abacus/kernels.hpp"

#include "abacus/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <string>

namespace abacus::kernels {

namespace {

constexpr std::uint64_t kRodStates = (kLowerBeads + 1) * (kUpperBeads + 1);

void check_range(std::size_t rods, std::uint64_t begin, std::uint64_t end) {
  if (rods == 0 || rods > 18) throw DomainError(ErrorCode::InvalidArgument, "kernels scan 1..18 rods");
  if (begin > end || Natural(end) > power_of_ten(rods)) {
    throw DomainError(ErrorCode::Overflow, "scan range exceeds 10^" + std::to_string(rods));
  }
}

MinimalityStats minimality_of(std::uint64_t n, std::size_t rods) {
  MinimalityStats s;
  s.checked = 1;
  const AbacusConfig economical = set_economical(n, rods);
  const std::size_t best = bead_count(economical);
  bool found = false;
  for_each_inscription(n, rods, [&](const AbacusConfig& c) {
    ++s.inscriptions;
    if (c == economical) {
      found = true;
      return;
    }
    const std::size_t beads = bead_count(c);
    if (beads < best) ++s.violations;
    else if (beads == best) ++s.ties;
  });
  if (!found) s.missing = 1;
  return s;
}

bool drawing_roundtrips(std::uint64_t index, std::size_t rods, DrawingStyle style) {
  const AbacusConfig c = config_from_index(index, rods);
  try {
    return parse_drawing(render(c, style).structure) == c;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::uint64_t config_space(std::size_t rods) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < rods; ++i) n *= kRodStates;
  return n;
}

AbacusConfig config_from_index(std::uint64_t index, std::size_t rods) {
  std::vector<RodState> out(rods);
  for (std::size_t k = 0; k < rods; ++k) {
    const auto digit = static_cast<int>(index % kRodStates);
    index /= kRodStates;
    out[k] = RodState{digit % (kLowerBeads + 1), digit / (kLowerBeads + 1)};
  }
  return AbacusConfig(std::move(out));
}

namespace serial {

MinimalityStats economical_minimality(std::size_t rods, std::uint64_t begin, std::uint64_t end) {
  check_range(rods, begin, end);
  MinimalityStats total;
  for (std::uint64_t n = begin; n < end; ++n) {
    const MinimalityStats s = minimality_of(n, rods);
    total.checked += s.checked;
    total.inscriptions += s.inscriptions;
    total.missing += s.missing;
    total.violations += s.violations;
    total.ties += s.ties;
  }
  return total;
}

std::uint64_t roundtrip_failures(std::size_t rods, std::uint64_t begin, std::uint64_t end) {
  check_range(rods, begin, end);
  std::uint64_t failures = 0;
  for (std::uint64_t n = begin; n < end; ++n) {
    if (read_value(set_economical(n, rods)) != n) ++failures;
  }
  return failures;
}

std::uint64_t drawing_roundtrip_failures(std::size_t rods, DrawingStyle style) {
  std::uint64_t failures = 0;
  const std::uint64_t space = config_space(rods);
  for (std::uint64_t i = 0; i < space; ++i) {
    if (!drawing_roundtrips(i, rods, style)) ++failures;
  }
  return failures;
}

}  // namespace serial

namespace parallel {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

MinimalityStats economical_minimality(std::size_t rods, std::uint64_t begin, std::uint64_t end) {
  check_range(rods, begin, end);
  std::uint64_t checked = 0, inscriptions = 0, missing = 0, violations = 0, ties = 0;
  const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : checked, inscriptions, missing, violations, ties)
  for (std::int64_t i = 0; i < count; ++i) {
    const MinimalityStats s = minimality_of(begin + static_cast<std::uint64_t>(i), rods);
    checked += s.checked;
    inscriptions += s.inscriptions;
    missing += s.missing;
    violations += s.violations;
    ties += s.ties;
  }
  return MinimalityStats{checked, inscriptions, missing, violations, ties};
}

std::uint64_t roundtrip_failures(std::size_t rods, std::uint64_t begin, std::uint64_t end) {
  check_range(rods, begin, end);
  std::uint64_t failures = 0;
  const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(static) reduction(+ : failures)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t n = begin + static_cast<std::uint64_t>(i);
    if (read_value(set_economical(n, rods)) != n) ++failures;
  }
  return failures;
}

std::uint64_t drawing_roundtrip_failures(std::size_t rods, DrawingStyle style) {
  std::uint64_t failures = 0;
  const auto space = static_cast<std::int64_t>(config_space(rods));
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : failures)
  for (std::int64_t i = 0; i < space; ++i) {
    if (!drawing_roundtrips(static_cast<std::uint64_t>(i), rods, style)) ++failures;
  }
  return failures;
}

}  // namespace parallel

}  // namespace abacus::kernels
