#pragma once

#include "circsimp/circuit.hpp"
#include "circsimp/fundb.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace circsimp::test
{

inline Signal sig( GateId id, bool negated = false )
{
  return { id, negated };
}

inline GateId gate( Circuit& c, GateKind kind, Signal a, Signal b, const std::string& name )
{
  GateId id = c.add_gate( kind, { a, b } );
  c.set_name( id, name );
  return id;
}

inline std::vector<GateId> add_inputs( Circuit& c, int n, int first = 1 )
{
  std::vector<GateId> v;
  for ( int i = 0; i < n; ++i )
    v.push_back( c.add_input( "x" + std::to_string( i + first ) ) );
  return v;
}

/* a = x1 ^ x2 dangles, c = x1 & (x2 | x3) is the output. */
inline Circuit dangling_example()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 3 );
  gate( c, GateKind::Xor, sig( x[0] ), sig( x[1] ), "a" );
  GateId b = gate( c, GateKind::Or, sig( x[1] ), sig( x[2] ), "b" );
  GateId out = gate( c, GateKind::And, sig( x[0] ), sig( b ), "c" );
  c.add_output( sig( out ), "c" );
  return c;
}

/* b and c are both x2 ^ x3. */
inline Circuit duplicate_example()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 4 );
  GateId a = gate( c, GateKind::Or, sig( x[0] ), sig( x[1] ), "a" );
  GateId b = gate( c, GateKind::Xor, sig( x[1] ), sig( x[2] ), "b" );
  GateId cc = gate( c, GateKind::Xor, sig( x[1] ), sig( x[2] ), "c" );
  GateId d = gate( c, GateKind::And, sig( a ), sig( b ), "d" );
  GateId e = gate( c, GateKind::Xor, sig( x[3] ), sig( cc ), "e" );
  GateId f = gate( c, GateKind::And, sig( d ), sig( e ), "f" );
  c.add_output( sig( f ), "f" );
  return c;
}

/* Full adder of size 7 with a sum-of-products carry. */
inline Circuit adder7()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 3 );
  GateId g4 = gate( c, GateKind::And, sig( x[0] ), sig( x[1] ), "g4" );
  GateId g5 = gate( c, GateKind::And, sig( x[0] ), sig( x[2] ), "g5" );
  GateId g6 = gate( c, GateKind::Xor, sig( x[1] ), sig( x[2] ), "g6" );
  GateId g7 = gate( c, GateKind::And, sig( x[1] ), sig( x[2] ), "g7" );
  GateId g8 = gate( c, GateKind::Xor, sig( x[0] ), sig( g6 ), "g8" );
  GateId g9 = gate( c, GateKind::Or, sig( g5 ), sig( g7 ), "g9" );
  GateId g10 = gate( c, GateKind::Or, sig( g4 ), sig( g9 ), "g10" );
  c.add_output( sig( g8 ), "s" );
  c.add_output( sig( g10 ), "c" );
  return c;
}

/* Full adder of size 5. */
inline Circuit adder5()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 3 );
  GateId g4 = gate( c, GateKind::Xor, sig( x[0] ), sig( x[1] ), "g4" );
  GateId g5 = gate( c, GateKind::Xor, sig( g4 ), sig( x[2] ), "g5" );
  GateId g6 = gate( c, GateKind::And, sig( x[0] ), sig( x[1] ), "g6" );
  GateId g7 = gate( c, GateKind::And, sig( x[2] ), sig( g4 ), "g7" );
  GateId g8 = gate( c, GateKind::Xor, sig( g6 ), sig( g7 ), "g8" );
  c.add_output( sig( g5 ), "s" );
  c.add_output( sig( g8 ), "c" );
  return c;
}

/* BENCH circuit of size 8 with three inputs and three outputs. */
inline Circuit three_output8()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 3 );
  GateId g3 = gate( c, GateKind::Xor, sig( x[0] ), sig( x[1] ), "g3" );
  GateId g4 = gate( c, GateKind::Nxor, sig( x[0] ), sig( x[2] ), "g4" );
  GateId g5 = gate( c, GateKind::Nor, sig( x[0] ), sig( g4 ), "g5" );
  GateId g8 = gate( c, GateKind::Or, sig( g3 ), sig( g4 ), "g8" );
  GateId g6 = gate( c, GateKind::Nor, sig( g5 ), sig( g3 ), "g6" );
  GateId g9 = gate( c, GateKind::Nxor, sig( x[2] ), sig( g8 ), "g9" );
  GateId g7 = gate( c, GateKind::Nxor, sig( g6 ), sig( x[2] ), "g7" );
  GateId g10 = gate( c, GateKind::Or, sig( g5 ), sig( g7 ), "g10" );
  c.add_output( sig( g9 ), "g9" );
  c.add_output( sig( g7 ), "g7" );
  c.add_output( sig( g10 ), "g10" );
  return c;
}

/* AIG circuit of size 11. */
inline Circuit three_output_aig11()
{
  Circuit c( Basis::Aig );
  auto x = add_inputs( c, 3 );
  auto a = [&]( Signal p, Signal q, const char* n ) { return gate( c, GateKind::And, p, q, n ); };
  GateId g10 = a( sig( x[0] ), sig( x[1] ), "g10" );
  GateId g7 = a( sig( x[0], true ), sig( x[1], true ), "g7" );
  GateId g8 = a( sig( g7, true ), sig( x[2] ), "g8" );
  GateId g6 = a( sig( x[2] ), sig( g10 ), "g6" );
  GateId g11 = a( sig( x[2] ), sig( x[1], true ), "g11" );
  GateId g5 = a( sig( g10, true ), sig( x[2], true ), "g5" );
  GateId g12 = a( sig( g8, true ), sig( g5, true ), "g12" );
  GateId g4 = a( sig( g5, true ), sig( g6, true ), "g4" );
  GateId g13 = a( sig( g4, true ), sig( g7, true ), "g13" );
  GateId g3 = a( sig( g13, true ), sig( g7, true ), "g3" );
  GateId g9 = a( sig( g13, true ), sig( g11, true ), "g9" );
  c.add_output( sig( g12 ), "g12" );
  c.add_output( sig( g3 ), "g3" );
  c.add_output( sig( g9 ), "g9" );
  return c;
}

/* x5 = x1 & x2, x6 = x1 | x2, x7 = x3 & x4, x8 = x5 & x6, x9 = x5 & x7. */
inline Circuit closure_example()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 4 );
  GateId x5 = gate( c, GateKind::And, sig( x[0] ), sig( x[1] ), "x5" );
  GateId x6 = gate( c, GateKind::Or, sig( x[0] ), sig( x[1] ), "x6" );
  GateId x7 = gate( c, GateKind::And, sig( x[2] ), sig( x[3] ), "x7" );
  GateId x8 = gate( c, GateKind::And, sig( x5 ), sig( x6 ), "x8" );
  GateId x9 = gate( c, GateKind::And, sig( x5 ), sig( x7 ), "x9" );
  c.add_output( sig( x8 ), "x8" );
  c.add_output( sig( x9 ), "x9" );
  return c;
}

/* Five-input parity as an XOR chain (size 4). */
inline Circuit parity5()
{
  Circuit c( Basis::Bench );
  auto x = add_inputs( c, 5 );
  GateId a = gate( c, GateKind::Xor, sig( x[0] ), sig( x[1] ), "a" );
  GateId b = gate( c, GateKind::Xor, sig( x[2] ), sig( x[3] ), "b" );
  GateId cc = gate( c, GateKind::Xor, sig( a ), sig( b ), "c" );
  GateId d = gate( c, GateKind::Xor, sig( cc ), sig( x[4] ), "d" );
  c.add_output( sig( d ), "d" );
  return c;
}

inline GateId id_of( const Circuit& c, const std::string& name )
{
  auto id = c.find( name );
  if ( !id )
    throw std::runtime_error( "no gate named " + name );
  return *id;
}

/* Random DAG; later gates prefer recent operands so few gates dangle. */
inline Circuit random_circuit( Basis basis, int inputs, int gates, int outputs, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  Circuit c( basis );
  std::vector<GateId> pool;
  for ( int i = 0; i < inputs; ++i )
    pool.push_back( c.add_input( "i" + std::to_string( i ) ) );
  static constexpr GateKind kBench[] = { GateKind::Not, GateKind::And,  GateKind::Or,  GateKind::Xor,
                                         GateKind::Nand, GateKind::Nor, GateKind::Nxor };
  auto pick = [&]() {
    std::size_t n = pool.size();
    std::size_t window = std::min<std::size_t>( n, 8 );
    if ( rng() % 3 == 0 )
      return pool[rng() % n];
    return pool[n - 1 - rng() % window];
  };
  for ( int g = 0; g < gates; ++g )
  {
    GateId a = pick(), b = pick();
    for ( int tries = 0; a == b && tries < 4; ++tries )
      b = pick();
    if ( basis == Basis::Aig )
      pool.push_back( c.add_gate( GateKind::And, { Signal{ a, bool( rng() & 1 ) }, Signal{ b, bool( rng() & 2 ) } } ) );
    else
    {
      GateKind k = kBench[rng() % 7];
      if ( k == GateKind::Not )
        pool.push_back( c.add_gate( k, { Signal{ a, false } } ) );
      else
        pool.push_back( c.add_gate( k, { Signal{ a, false }, Signal{ b, false } } ) );
    }
  }
  for ( int o = 0; o < outputs && !pool.empty(); ++o )
  {
    GateId id = o == 0 ? pool.back() : pool[rng() % pool.size()];
    c.add_output( { id, basis == Basis::Aig && ( rng() & 1 ) } );
  }
  return c;
}

/* Memoized recursive evaluation written independently of Simulator. */
inline std::vector<bool> naive_eval( const Circuit& c, const std::vector<bool>& in )
{
  std::vector<int> memo( c.capacity(), -1 );
  for ( std::size_t i = 0; i < c.num_inputs(); ++i )
    memo[c.inputs()[i]] = in[i];
  std::function<bool( Signal )> value = [&]( Signal s ) -> bool {
    int& m = memo[s.id];
    if ( m < 0 )
    {
      const Gate& g = c.gate( s.id );
      bool a = g.num_fanins() > 0 && value( g.fanins[0] );
      bool b = g.num_fanins() > 1 && value( g.fanins[1] );
      switch ( g.kind )
      {
      case GateKind::Const0: m = 0; break;
      case GateKind::Const1: m = 1; break;
      case GateKind::Not: m = !a; break;
      case GateKind::And: m = a && b; break;
      case GateKind::Or: m = a || b; break;
      case GateKind::Xor: m = a != b; break;
      case GateKind::Nand: m = !( a && b ); break;
      case GateKind::Nor: m = !( a || b ); break;
      case GateKind::Nxor: m = a == b; break;
      default: m = 0; break;
      }
    }
    return bool( m ) != s.negated;
  };
  std::vector<bool> out;
  for ( Signal o : c.outputs() )
    out.push_back( value( o ) );
  return out;
}

inline std::vector<bool> assignment_bits( std::uint64_t index, std::size_t n )
{
  std::vector<bool> v( n );
  for ( std::size_t i = 0; i < n; ++i )
    v[i] = index >> i & 1;
  return v;
}

/* Output tables by plain enumeration, for small circuits. */
inline std::vector<std::vector<bool>> brute_tables( const Circuit& c )
{
  std::vector<std::vector<bool>> t( c.num_outputs() );
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << c.num_inputs() ); ++x )
  {
    auto out = naive_eval( c, assignment_bits( x, c.num_inputs() ) );
    for ( std::size_t o = 0; o < out.size(); ++o )
      t[o].push_back( out[o] );
  }
  return t;
}

/* Binary AIGER from canonically numbered ASCII AIGER. */
inline std::string aag_to_aig( const std::string& aag )
{
  std::istringstream in( aag );
  std::string magic;
  unsigned m, i, l, o, a;
  in >> magic >> m >> i >> l >> o >> a;
  std::string out = "aig " + std::to_string( m ) + " " + std::to_string( i ) + " " + std::to_string( l ) + " " +
                    std::to_string( o ) + " " + std::to_string( a ) + "\n";
  for ( unsigned k = 0; k < i; ++k )
  {
    unsigned lit;
    in >> lit;
    if ( lit != 2 * ( k + 1 ) )
      throw std::runtime_error( "aag_to_aig: inputs are not canonically numbered" );
  }
  for ( unsigned k = 0; k < o; ++k )
  {
    unsigned lit;
    in >> lit;
    out += std::to_string( lit ) + "\n";
  }
  auto put = [&]( unsigned x ) {
    while ( x & ~0x7fu )
    {
      out.push_back( static_cast<char>( ( x & 0x7f ) | 0x80 ) );
      x >>= 7;
    }
    out.push_back( static_cast<char>( x ) );
  };
  for ( unsigned k = 0; k < a; ++k )
  {
    unsigned lhs, r0, r1;
    in >> lhs >> r0 >> r1;
    if ( lhs != 2 * ( i + l + k + 1 ) )
      throw std::runtime_error( "aag_to_aig: ANDs are not canonically numbered" );
    if ( r0 < r1 )
      std::swap( r0, r1 );
    put( lhs - r0 );
    put( r0 - r1 );
  }
  std::string rest;
  std::getline( in, rest );
  while ( std::getline( in, rest ) )
    out += rest + "\n";
  return out;
}

/* Shared databases, built once per process. */
inline const Database& bench_db()
{
  static const Database db = build_database( Basis::Bench, { 5, 0 } );
  return db;
}

inline const Database& aig_db()
{
  static const Database db = build_database( Basis::Aig, { 6, 0 } );
  return db;
}

} // namespace circsimp::test
