#pragma once

#include "circsimp/circuit.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace circsimp
{

/* Three 8-bit tables over x1..x3 (x1 is bit 0 of the assignment index). */
using TruthTriple = std::array<std::uint8_t, 3>;

inline constexpr std::array<std::uint8_t, 3> kProjections = { 0xaa, 0xcc, 0xf0 };

/* Substitution psi(x)_k = x[perm[k]] ^ bit k of neg. */
struct InputMap
{
  std::array<std::uint8_t, 3> perm = { 0, 1, 2 };
  std::uint8_t neg = 0;

  bool operator==( const InputMap& ) const = default;
};

InputMap inverse( const InputMap& m );
/* Table of t(psi(x)). */
std::uint8_t apply_input_map( const InputMap& m, std::uint8_t table );

/* query[i](x) = key[output_perm[i]](psi(x)) ^ bit i of output_neg. */
struct ClassTransform
{
  InputMap inputs;
  std::array<std::uint8_t, 3> output_perm = { 0, 1, 2 };
  std::uint8_t output_neg = 0;

  bool is_identity() const { return inputs == InputMap{} && output_perm == std::array<std::uint8_t, 3>{ 0, 1, 2 } && !output_neg; }
};

TruthTriple apply_transform( const ClassTransform& g, const TruthTriple& key );

struct CanonicalForm
{
  TruthTriple key;
  ClassTransform transform;
};

CanonicalForm canonicalize( const TruthTriple& triple, Basis basis );

/* Number of distinct-table triples (as sets) in the orbit of a key. */
std::size_t orbit_size( const TruthTriple& key, Basis basis );

/* Straight-line program over three inputs. Signal 0 is constant 0,
   1..3 are the inputs, 4.. the gates in order. */
struct ChainRef
{
  std::uint8_t signal = 0;
  bool negated = false;

  ChainRef operator^( bool n ) const { return { signal, negated != n }; }
  bool operator==( const ChainRef& ) const = default;
};

struct ChainGate
{
  GateKind kind = GateKind::And;
  ChainRef a, b;
};

struct Chain
{
  std::vector<ChainGate> gates;
  std::array<ChainRef, 3> outputs{};

  TruthTriple evaluate() const;
  std::size_t size() const { return gates.size(); }
};

/* Rewires inputs through psi and selects/negates outputs. */
Chain rewire( const Chain& chain, const InputMap& psi, const std::array<std::uint8_t, 3>& output_source,
              std::uint8_t output_neg );

/* Removes gates outside the output cones. */
Chain prune( const Chain& chain );

struct DbEntry
{
  TruthTriple key{};
  std::uint8_t size = 0;
  bool optimal = false;
  Chain chain;
};

struct LevelReport
{
  int size = 0;
  std::size_t states = 0;
  std::size_t classes = 0;
  bool complete = false;
};

struct BuildReport
{
  std::vector<LevelReport> levels;
  bool budget_exhausted = false;
  double seconds = 0;
};

class Database
{
public:
  Database() = default;
  Database( Basis basis, int cap ) : basis_( basis ), cap_( cap ) {}

  Basis basis() const { return basis_; }
  int cap() const { return cap_; }
  std::size_t num_classes() const { return entries_.size(); }

  const DbEntry* find( const TruthTriple& key ) const;
  /* Keeps the smaller entry on conflict. */
  void insert( DbEntry entry );
  std::vector<const DbEntry*> sorted_entries() const;

  BuildReport& report() { return report_; }
  const BuildReport& report() const { return report_; }

private:
  Basis basis_ = Basis::Bench;
  int cap_ = 0;
  std::unordered_map<std::uint32_t, DbEntry> entries_;
  BuildReport report_;
};

struct BuildOptions
{
  int max_size = 5;
  /* Seconds; zero or negative means unlimited. */
  double time_budget = 0;
};

Database build_database( Basis basis, const BuildOptions& options );

struct Fragment
{
  Chain chain;
  std::size_t size = 0;
};

/* Chain in the given basis computing the query triple, or nothing. In
   BENCH mode output negations are realized with gates. */
std::optional<Fragment> lookup( const Database& db, const TruthTriple& triple );

/* Up to three distinct tables padded with x1 then x2 (then x3). */
TruthTriple pad_tables( const std::vector<std::uint8_t>& tables );

void save_db( const Database& db, std::ostream& out );
Database load_db( std::istream& in );
void save_db_file( const Database& db, const std::string& path );
Database load_db_file( const std::string& path );

struct SizeStats
{
  std::size_t classes = 0;
  std::size_t functions = 0;
  std::size_t optimal_classes = 0;
};

std::map<int, SizeStats> db_stats( const Database& db );
/* One line per size: `s: C classes, F functions`. */
std::string format_stats( const Database& db );

} // namespace circsimp
