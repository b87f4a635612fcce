#include "circsimp/equiv.hpp"

#include "circsimp/builder.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <sys/wait.h>

namespace circsimp
{

namespace
{

void check_interface( const Circuit& a, const Circuit& b )
{
  if ( a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs() )
    throw CircuitError( "interface mismatch: " + std::to_string( a.num_inputs() ) + "/" +
                        std::to_string( a.num_outputs() ) + " vs " + std::to_string( b.num_inputs() ) + "/" +
                        std::to_string( b.num_outputs() ) + " inputs/outputs" );
}

std::uint64_t splitmix( std::uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

/* Index of the first differing bit among 64 assignments, or -1. */
int first_difference( Simulator& sa, Simulator& sb, std::size_t outputs, std::uint64_t mask )
{
  std::uint64_t diff = 0;
  for ( std::size_t o = 0; o < outputs; ++o )
    diff |= sa.output( o ) ^ sb.output( o );
  diff &= mask;
  return diff ? __builtin_ctzll( diff ) : -1;
}

struct WordSource
{
  CheckMode mode;
  std::uint64_t seed;
  std::size_t inputs;

  void fill( std::uint64_t word, std::vector<std::uint64_t>& out ) const
  {
    for ( std::size_t i = 0; i < inputs; ++i )
      out[i] = mode == CheckMode::Exhaustive ? exhaustive_pattern( static_cast<unsigned>( i ), word )
                                             : splitmix( seed ^ splitmix( word * inputs + i ) );
  }
};

} // namespace

Circuit miter( const Circuit& a, const Circuit& b )
{
  check_interface( a, b );
  Circuit m( a.basis() );
  Builder builder( m );
  std::vector<Signal> inputs;
  for ( GateId x : a.inputs() )
  {
    const std::string* name = a.name( x );
    inputs.push_back( builder.input( name ? *name : std::string{} ) );
  }
  auto ya = append_circuit( builder, a, inputs );
  auto yb = append_circuit( builder, b, inputs );
  Signal any = builder.constant( false );
  for ( std::size_t i = 0; i < ya.size(); ++i )
    any = builder.or_( any, builder.xor_( ya[i], yb[i] ) );
  builder.output( any, "miter" );
  return m;
}

const char* verdict_name( Verdict v )
{
  switch ( v )
  {
  case Verdict::Equal: return "equal";
  case Verdict::Counterexample: return "counterexample";
  default: return "inconclusive";
  }
}

CheckResult check_equiv( const Circuit& a, const Circuit& b, const CheckOptions& options )
{
  check_interface( a, b );
  std::size_t n = a.num_inputs();
  std::uint64_t words = 0, tail_mask = ~0ull;
  if ( options.mode == CheckMode::Exhaustive )
  {
    if ( n > options.exhaustive_cap )
      throw std::invalid_argument( "exhaustive check needs at most " + std::to_string( options.exhaustive_cap ) +
                                   " inputs, circuit has " + std::to_string( n ) );
    std::uint64_t total = std::uint64_t{ 1 } << n;
    words = ( total + 63 ) / 64;
    if ( total < 64 )
      tail_mask = ( std::uint64_t{ 1 } << total ) - 1;
  }
  else
    words = ( options.vectors + 63 ) / 64;

  WordSource source{ options.mode, options.seed, n };
  unsigned threads = std::max( 1u, std::min<unsigned>( options.threads, static_cast<unsigned>( words ? words : 1 ) ) );
  std::vector<std::uint64_t> first( threads, UINT64_MAX );
  auto worker = [&]( unsigned t ) {
    Simulator sa( a ), sb( b );
    std::vector<std::uint64_t> in( n );
    for ( std::uint64_t w = t; w < words; w += threads )
    {
      source.fill( w, in );
      sa.run( in );
      sb.run( in );
      std::uint64_t mask = w + 1 == words ? tail_mask : ~0ull;
      if ( options.mode == CheckMode::Random && w + 1 == words && options.vectors % 64 )
        mask = ( std::uint64_t{ 1 } << ( options.vectors % 64 ) ) - 1;
      int bit = first_difference( sa, sb, a.num_outputs(), mask );
      if ( bit >= 0 )
      {
        first[t] = w * 64 + static_cast<std::uint64_t>( bit );
        break;
      }
    }
  };
  if ( threads == 1 )
    worker( 0 );
  else
  {
    std::vector<std::thread> pool;
    for ( unsigned t = 0; t < threads; ++t )
      pool.emplace_back( worker, t );
    for ( auto& th : pool )
      th.join();
  }

  CheckResult result;
  std::uint64_t hit = *std::min_element( first.begin(), first.end() );
  if ( hit == UINT64_MAX )
  {
    result.verdict = options.mode == CheckMode::Exhaustive ? Verdict::Equal : Verdict::Inconclusive;
    result.vectors_checked = options.mode == CheckMode::Exhaustive ? ( std::uint64_t{ 1 } << n ) : options.vectors;
    return result;
  }
  std::vector<std::uint64_t> in( n );
  source.fill( hit / 64, in );
  std::vector<bool> assignment( n );
  for ( std::size_t i = 0; i < n; ++i )
    assignment[i] = in[i] >> ( hit % 64 ) & 1;
  if ( simulate( a, assignment ) == simulate( b, assignment ) )
    throw std::logic_error( "counterexample did not reproduce" );
  result.verdict = Verdict::Counterexample;
  result.counterexample = std::move( assignment );
  result.vectors_checked = hit + 1;
  return result;
}

std::string export_cnf( const Circuit& circuit )
{
  if ( circuit.num_outputs() != 1 )
    throw CircuitError( "CNF export needs a single-output circuit" );
  std::vector<int> var( circuit.capacity(), 0 );
  std::vector<GateId> cone = reachable_from_outputs( circuit );
  std::vector<char> in_cone( circuit.capacity(), 0 );
  for ( GateId id : cone )
    in_cone[id] = 1;
  std::ostringstream comments, clauses;
  int vars = 0;
  std::size_t count = 0;
  auto lit = [&]( Signal s ) { return s.negated ? -var[s.id] : var[s.id]; };
  auto clause = [&]( std::initializer_list<int> lits ) {
    for ( int l : lits )
      clauses << l << ' ';
    clauses << "0\n";
    ++count;
  };
  /* v <-> (a & b) */
  auto and_clauses = [&]( int v, int a, int b ) {
    clause( { -v, a } );
    clause( { -v, b } );
    clause( { v, -a, -b } );
  };
  auto xor_clauses = [&]( int v, int a, int b ) {
    clause( { -v, a, b } );
    clause( { -v, -a, -b } );
    clause( { v, -a, b } );
    clause( { v, a, -b } );
  };
  for ( GateId id : circuit.topological_order() )
  {
    if ( !in_cone[id] && circuit.kind( id ) != GateKind::Input )
      continue;
    var[id] = ++vars;
    const std::string* name = circuit.name( id );
    comments << "c " << vars << " = " << kind_name( circuit.kind( id ) ) << ' ' << id;
    if ( name )
      comments << ' ' << *name;
    comments << '\n';
    const Gate& g = circuit.gate( id );
    int v = var[id];
    switch ( g.kind )
    {
    case GateKind::Input: break;
    case GateKind::Const0: clause( { -v } ); break;
    case GateKind::Const1: clause( { v } ); break;
    case GateKind::Not:
      clause( { v, lit( g.fanins[0] ) } );
      clause( { -v, -lit( g.fanins[0] ) } );
      break;
    case GateKind::And: and_clauses( v, lit( g.fanins[0] ), lit( g.fanins[1] ) ); break;
    case GateKind::Nand: and_clauses( -v, lit( g.fanins[0] ), lit( g.fanins[1] ) ); break;
    case GateKind::Or: and_clauses( -v, -lit( g.fanins[0] ), -lit( g.fanins[1] ) ); break;
    case GateKind::Nor: and_clauses( v, -lit( g.fanins[0] ), -lit( g.fanins[1] ) ); break;
    case GateKind::Xor: xor_clauses( v, lit( g.fanins[0] ), lit( g.fanins[1] ) ); break;
    case GateKind::Nxor: xor_clauses( -v, lit( g.fanins[0] ), lit( g.fanins[1] ) ); break;
    }
  }
  clause( { lit( circuit.outputs()[0] ) } );
  std::ostringstream out;
  out << comments.str() << "p cnf " << vars << ' ' << count << '\n' << clauses.str();
  return out.str();
}

std::optional<bool> run_external_solver( const std::string& solver, const std::string& cnf_path )
{
  auto quote = []( const std::string& s ) {
    std::string q = "'";
    for ( char c : s )
      q += c == '\'' ? std::string( "'\\''" ) : std::string( 1, c );
    return q + "'";
  };
  std::string cmd = quote( solver ) + " " + quote( cnf_path ) + " >/dev/null 2>&1";
  int status = std::system( cmd.c_str() );
  if ( status == -1 || !WIFEXITED( status ) )
    return std::nullopt;
  switch ( WEXITSTATUS( status ) )
  {
  case 10: return true;
  case 20: return false;
  default: return std::nullopt;
  }
}

} // namespace circsimp
