#pragma once

#include "circsimp/circuit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circsimp
{

/* One output, 1 exactly where some pair of outputs differs. */
Circuit miter( const Circuit& a, const Circuit& b );

enum class CheckMode
{
  Exhaustive,
  Random
};

struct CheckOptions
{
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t vectors = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  unsigned exhaustive_cap = kDefaultExhaustiveCap;
};

enum class Verdict
{
  Equal,
  Counterexample,
  Inconclusive
};

struct CheckResult
{
  Verdict verdict = Verdict::Inconclusive;
  std::vector<bool> counterexample;
  std::uint64_t vectors_checked = 0;
};

CheckResult check_equiv( const Circuit& a, const Circuit& b, const CheckOptions& options = {} );

const char* verdict_name( Verdict v );

/* Tseitin encoding of a single-output circuit with the output asserted. */
std::string export_cnf( const Circuit& circuit );

/* Runs `solver cnf_path` and reads its exit status (10 SAT, 20 UNSAT).
   Returns nothing when the solver cannot be run or answers otherwise. */
std::optional<bool> run_external_solver( const std::string& solver, const std::string& cnf_path );

} // namespace circsimp
