#pragma once

#include "circsimp/circuit.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace circsimp
{

/* Sorted gate ids, at most three. */
using GateSet = std::vector<GateId>;

struct GeneratorSet
{
  GateSet gates;
  GateId anchor = kNoGate;
};

struct PrincipalSubcircuit
{
  GeneratorSet generator;
  std::vector<GateId> closure; // topological order
  std::vector<GateId> inputs;  // equals generator.gates
  std::vector<GateId> outputs; // closure gates outside the inputs that are seen from outside
  std::vector<std::pair<GateId, std::uint64_t>> versions;
};

/* g(X) by forward propagation, in topological order. */
std::vector<GateId> closure( const Circuit& circuit, std::span<const GateId> generators );

/* v in g(X), decided by a backward search that stops at X. */
bool in_closure( const Circuit& circuit, GateId v, std::span<const GateId> generators );

std::optional<int> dependency_degree( const Circuit& circuit, GateId v, std::span<const GateId> generators );

struct SSetOptions
{
  std::size_t candidate_cap = 64;
};

struct SSets
{
  /* Per gate id: minimal generators of size 1, 2 and 3, sorted. */
  std::vector<std::vector<GateSet>> s1, s2, s3;
  /* Gates whose lists were truncated by the candidate cap. */
  std::vector<char> flagged;

  const std::vector<GateSet>& of_size( int k, GateId v ) const { return k == 1 ? s1[v] : k == 2 ? s2[v] : s3[v]; }
};

SSets s_sets( const Circuit& circuit, const SSetOptions& options = {} );

/* Definitional enumeration over all subsets; limited to 64 gate ids. */
SSets brute_force_s_sets( const Circuit& circuit );

struct EnumerationStats
{
  std::size_t flagged_gates = 0;
  /* Gates with more mutually non-dominating generators than the bound allows. */
  std::size_t bound_violations = 0;
};

/* Dominating size-k generators per gate (k = 2 or 3), deduplicated, in
   anchor topological order. */
std::vector<PrincipalSubcircuit> principal_subcircuits( const Circuit& circuit, int k, const SSetOptions& options = {},
                                                        EnumerationStats* stats = nullptr );

PrincipalSubcircuit make_subcircuit( const Circuit& circuit, GeneratorSet generator );

bool is_stale( const Circuit& circuit, const PrincipalSubcircuit& sub );

} // namespace circsimp
