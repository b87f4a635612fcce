#include "circsimp/preprocess.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace circsimp
{

std::size_t remove_dangling( Circuit& circuit )
{
  std::vector<char> live( circuit.capacity(), 0 );
  for ( GateId id : reachable_from_outputs( circuit ) )
    live[id] = 1;
  std::vector<GateId> order = circuit.topological_order();
  std::size_t removed = 0;
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    if ( live[*it] || circuit.kind( *it ) == GateKind::Input )
      continue;
    circuit.remove_gate( *it );
    ++removed;
  }
  return removed;
}

std::size_t remove_dead_from( Circuit& circuit, std::vector<GateId> seeds )
{
  std::size_t removed = 0;
  while ( !seeds.empty() )
  {
    GateId id = seeds.back();
    seeds.pop_back();
    if ( !circuit.alive( id ) || circuit.kind( id ) == GateKind::Input || circuit.has_consumers( id ) )
      continue;
    const Gate& g = circuit.gate( id );
    for ( int i = 0; i < g.num_fanins(); ++i )
      seeds.push_back( g.fanins[i].id );
    circuit.remove_gate( id );
    ++removed;
  }
  return removed;
}

namespace
{

using StrashKey = std::tuple<GateKind, Signal, Signal>;

StrashKey strash_key( const Gate& g )
{
  Signal a = g.num_fanins() > 0 ? g.fanins[0] : Signal{};
  Signal b = g.num_fanins() > 1 ? g.fanins[1] : Signal{};
  if ( is_commutative( g.kind ) && b < a )
    std::swap( a, b );
  return { g.kind, a, b };
}

} // namespace

std::size_t merge_duplicates( Circuit& circuit )
{
  std::size_t merged = 0;
  for ( std::size_t pass = 0; pass <= circuit.num_alive(); ++pass )
  {
    std::size_t before = merged;
    std::map<StrashKey, GateId> seen;
    for ( GateId id : circuit.topological_order() )
    {
      if ( !circuit.alive( id ) )
        continue;
      const Gate& g = circuit.gate( id );
      if ( g.kind == GateKind::Input )
        continue;
      auto [it, inserted] = seen.emplace( strash_key( g ), id );
      if ( inserted )
        continue;
      circuit.replace_fanin( id, it->second );
      circuit.remove_gate( id );
      ++merged;
    }
    if ( merged == before )
      break;
  }
  return merged;
}

namespace
{

int const_value( const Circuit& c, Signal s )
{
  switch ( c.kind( s.id ) )
  {
  case GateKind::Const0: return s.negated ? 1 : 0;
  case GateKind::Const1: return s.negated ? 0 : 1;
  default: return -1;
  }
}

/* True when b is the complement of a. */
bool complementary( const Circuit& c, Signal a, Signal b )
{
  if ( a.id == b.id )
    return a.negated != b.negated;
  if ( c.basis() == Basis::Aig )
    return false;
  auto is_not_of = [&]( Signal n, Signal x ) {
    return c.kind( n.id ) == GateKind::Not && c.gate( n.id ).fanins[0] == x;
  };
  return is_not_of( a, b ) || is_not_of( b, a );
}

enum class Outcome
{
  Keep,
  Zero,
  One,
  Same,
  Negated
};

/* Classifies f(x) given its values on x = 0 and x = 1. */
Outcome classify( bool f0, bool f1 )
{
  if ( f0 == f1 )
    return f0 ? Outcome::One : Outcome::Zero;
  return f0 ? Outcome::Negated : Outcome::Same;
}

bool eval1( GateKind kind, bool a, bool b )
{
  return eval_kind( kind, a ? ~0ull : 0, b ? ~0ull : 0 ) & 1;
}

} // namespace

std::size_t apply_local_rules( Circuit& circuit )
{
  std::size_t rewritten = 0;
  for ( std::size_t pass = 0; pass <= circuit.num_alive(); ++pass )
  {
    std::size_t before = rewritten;
    for ( GateId id : circuit.topological_order() )
    {
      if ( !circuit.alive( id ) || !is_logic( circuit.kind( id ) ) )
        continue;
      const Gate g = circuit.gate( id );
      Outcome outcome = Outcome::Keep;
      Signal x{};

      if ( g.kind == GateKind::Not )
      {
        Signal a = g.fanins[0];
        int ca = const_value( circuit, a );
        if ( ca >= 0 )
          outcome = ca ? Outcome::Zero : Outcome::One;
        else if ( circuit.kind( a.id ) == GateKind::Not )
        {
          outcome = Outcome::Same;
          x = circuit.gate( a.id ).fanins[0];
        }
      }
      else
      {
        Signal a = g.fanins[0], b = g.fanins[1];
        // Edge negations fold into the evaluation below.
        auto value = [&]( Signal s, bool v ) { return v != s.negated; };
        int ca = const_value( circuit, a ), cb = const_value( circuit, b );
        if ( ca >= 0 || cb >= 0 )
        {
          if ( ca >= 0 && cb >= 0 )
            outcome = eval1( g.kind, ca, cb ) ? Outcome::One : Outcome::Zero;
          else
          {
            Signal var = ca >= 0 ? b : a;
            bool k = ca >= 0 ? ca : cb;
            x = { var.id, false };
            outcome = classify( eval1( g.kind, k, value( var, false ) ), eval1( g.kind, k, value( var, true ) ) );
          }
        }
        else if ( a == b )
        {
          x = { a.id, false };
          outcome = classify( eval1( g.kind, value( a, false ), value( a, false ) ),
                              eval1( g.kind, value( a, true ), value( a, true ) ) );
        }
        else if ( complementary( circuit, a, b ) )
        {
          bool f0 = eval1( g.kind, false, true ), f1 = eval1( g.kind, true, false );
          if ( f0 == f1 )
            outcome = f0 ? Outcome::One : Outcome::Zero;
        }
      }

      switch ( outcome )
      {
      case Outcome::Keep:
        continue;
      case Outcome::Zero:
      case Outcome::One:
        circuit.replace_fanin( id, circuit.constant( outcome == Outcome::One ) );
        break;
      case Outcome::Same:
        circuit.replace_fanin( id, x );
        break;
      case Outcome::Negated:
        if ( circuit.basis() == Basis::Aig )
          circuit.replace_fanin( id, !x );
        else if ( circuit.kind( x.id ) == GateKind::Not )
          circuit.replace_fanin( id, circuit.gate( x.id ).fanins[0] );
        else if ( g.kind == GateKind::Not && g.fanins[0] == x )
          continue;
        else
        {
          Signal ops[1] = { x };
          circuit.rewrite_gate( id, GateKind::Not, ops );
          ++rewritten;
          continue;
        }
        break;
      }
      ++rewritten;
      remove_dead_from( circuit, { id } );
    }
    if ( rewritten == before )
      break;
  }
  return rewritten;
}

PreprocessCounts preprocess( Circuit& circuit )
{
  PreprocessCounts counts;
  // Merging can expose new local rules, e.g. XOR(a, a).
  for ( bool changed = true; changed; )
  {
    std::size_t rewritten = apply_local_rules( circuit );
    std::size_t merged = merge_duplicates( circuit );
    counts.rewritten += rewritten;
    counts.merged += merged;
    changed = merged > 0;
  }
  counts.dangling = remove_dangling( circuit );
  return counts;
}

} // namespace circsimp
