#pragma once

// Minimal property-testing harness: a seeded generator feeds `cases` inputs
// to a check that returns an empty optional on success or a message on failure.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace prop {

using Rng = std::mt19937_64;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

template <class Gen, class Check>
Outcome for_all(std::string name, int cases, std::uint64_t seed, Gen&& gen, Check&& check) {
  Outcome out{std::move(name)};
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    auto input = gen(rng);
    ++out.cases;
    std::optional<std::string> failure;
    try {
      failure = check(input);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      if (out.failures == 0) out.first_failure = "case " + std::to_string(i) + ": " + *failure;
      ++out.failures;
    }
  }
  return out;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Complex number with modulus at most `radius`, uniform in the disk.
inline std::complex<double> in_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return std::polar(r, uniform(rng, -3.141592653589793, 3.141592653589793));
}

/// a_1 = 1 and |a_k| <= k for k = 2..N.
inline std::vector<std::complex<double>> bieberbach_vector(Rng& rng, int N) {
  std::vector<std::complex<double>> a(static_cast<std::size_t>(N));
  a[0] = 1.0;
  for (int k = 2; k <= N; ++k) a[k - 1] = in_disk(rng, k);
  return a;
}

}  // namespace prop
