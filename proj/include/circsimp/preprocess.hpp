#pragma once

#include "circsimp/circuit.hpp"

namespace circsimp
{

/* Removes gates with no path to an output. Inputs stay. */
std::size_t remove_dangling( Circuit& circuit );

/* Removes the given gates if they lost all consumers, then their
   fanins transitively. Cheaper than a full sweep after local edits. */
std::size_t remove_dead_from( Circuit& circuit, std::vector<GateId> seeds );

/* Structural hashing to a fixpoint. */
std::size_t merge_duplicates( Circuit& circuit );

/* Constant folding and idempotence rules to a fixpoint. */
std::size_t apply_local_rules( Circuit& circuit );

struct PreprocessCounts
{
  std::size_t dangling = 0;
  std::size_t merged = 0;
  std::size_t rewritten = 0;

  std::size_t total() const { return dangling + merged + rewritten; }
};

PreprocessCounts preprocess( Circuit& circuit );

} // namespace circsimp
