#pragma once

// Seeded property laws shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "suq2/algebra.hpp"

namespace suq2::props {

using Rng = std::mt19937_64;

struct LawResult {
  std::string name;
  int cases = 0;
  bool pass = true;
  std::string failure;  // first counterexample, if any
};

/// A law returns a description of the counterexample, or nullopt when the
/// drawn case satisfies it.
using Law = std::function<std::optional<std::string>(Rng&)>;

LawResult run_law(const std::string& name, int cases, std::uint64_t seed, const Law& law);

struct NamedLaw {
  std::string name;
  Law law;
};

/// Every registered law, grouped by module prefix ("scalar/", "algebra/", ...).
const std::vector<NamedLaw>& all_laws();

std::vector<LawResult> run_all(int cases, std::uint64_t seed, const std::string& prefix = "");

Scalar random_laurent(Rng& rng, int max_terms = 3);
Scalar random_scalar(Rng& rng);
Word random_word(Rng& rng, const Presentation& p, int max_len);
Element random_element(Rng& rng, const PresentationPtr& p, int max_terms, int max_len);

}  // namespace suq2::props
