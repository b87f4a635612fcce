#pragma once

#include "circsimp/circuit.hpp"
#include "circsimp/fundb.hpp"
#include "circsimp/principal.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace circsimp
{

struct RewriteConfig
{
  int iterations = 5;
  /* Accept a replacement only when it strictly shrinks the circuit. */
  bool strict = true;
  std::uint64_t seed = 0;
  const Database* database = nullptr;
  SSetOptions enumeration;
  bool log_replacements = false;
};

struct IterationStats
{
  std::size_t enumerated = 0;
  std::size_t examined = 0;
  std::size_t skipped = 0;
  std::size_t replaced = 0;
  std::size_t merged = 0;
  std::size_t preprocessed = 0;
  std::size_t saved = 0;
  std::size_t size_after = 0;
};

struct ReplacementRecord
{
  int iteration = 0;
  GateSet generator;
  std::size_t removed = 0;
  std::size_t added = 0;
};

struct RewriteReport
{
  std::vector<IterationStats> iterations;
  std::size_t initial_size = 0;
  std::size_t final_size = 0;
  double seconds = 0;
  std::vector<ReplacementRecord> log;
};

/* Where a window output comes from once the window is rewritten. */
struct OutputSource
{
  enum class Kind
  {
    Constant,
    Input,
    Table
  };
  Kind kind = Kind::Table;
  /* Input position in the generator or index into the looked-up tables. */
  std::uint8_t index = 0;
  bool negated = false;
};

struct WindowFunction
{
  /* Local table of every window output, over the generator in order. */
  std::vector<std::uint8_t> tables;
  std::vector<OutputSource> sources;
  /* Distinct tables that need a database lookup, before padding. */
  std::vector<std::uint8_t> lookup;
  TruthTriple triple{};
  bool fits = false;
};

WindowFunction subcircuit_truth_triple( const Circuit& circuit, const PrincipalSubcircuit& sub );

/* Structural hash of the live gates, checked against the circuit on every hit. */
class StrashTable
{
public:
  explicit StrashTable( const Circuit& circuit );

  GateId find( const Circuit& circuit, GateKind kind, Signal a, Signal b ) const;
  void insert( const Circuit& circuit, GateId id );

private:
  struct Key
  {
    GateKind kind;
    Signal a, b;
    bool operator==( const Key& ) const = default;
  };
  struct Hash
  {
    std::size_t operator()( const Key& k ) const;
  };
  static Key make_key( GateKind kind, Signal a, Signal b );

  std::unordered_map<Key, GateId, Hash> table_;
};

bool try_replace( Circuit& circuit, const PrincipalSubcircuit& sub, const Database& db, const RewriteConfig& config,
                  StrashTable& strash, ReplacementRecord* record = nullptr );

std::size_t merge_equivalent_in_window( Circuit& circuit, const PrincipalSubcircuit& sub );

RewriteReport simplify( Circuit& circuit, const RewriteConfig& config );

/* One line per iteration followed by the overall size change. */
std::string format_report( const RewriteReport& report );

} // namespace circsimp
