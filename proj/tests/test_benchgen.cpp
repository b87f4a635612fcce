#include "test_support.hpp"

#include "circsimp/benchgen.hpp"
#include "circsimp/equiv.hpp"

#include <doctest.h>

#include <bit>

using namespace circsimp;
using namespace circsimp::test;

namespace
{

bool satisfiable( const Circuit& c )
{
  for ( auto& t : truth_tables( c ) )
    for ( auto w : t.words() )
      if ( w )
        return true;
  return false;
}

/* Calls f(assignment index, outputs) for every assignment. */
template<typename F>
void for_all( const Circuit& c, F&& f )
{
  auto tables = truth_tables( c );
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << c.num_inputs() ); ++x )
  {
    std::vector<bool> out;
    for ( auto& t : tables )
      out.push_back( t.bit( x ) );
    f( x, out );
  }
}

std::uint64_t as_number( const std::vector<bool>& bits )
{
  std::uint64_t v = 0;
  for ( std::size_t i = 0; i < bits.size(); ++i )
    v |= std::uint64_t( bits[i] ) << i;
  return v;
}

bool has_clique( const Graph& g, std::size_t k )
{
  std::size_t n = g.vertices;
  std::vector<std::vector<char>> adj( n, std::vector<char>( n, 0 ) );
  for ( auto [u, v] : g.edges )
    adj[u][v] = adj[v][u] = 1;
  for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << n ); ++s )
  {
    if ( static_cast<std::size_t>( std::popcount( s ) ) != k )
      continue;
    bool ok = true;
    for ( std::size_t u = 0; u < n && ok; ++u )
      for ( std::size_t v = u + 1; v < n && ok; ++v )
        if ( ( s >> u & 1 ) && ( s >> v & 1 ) && !adj[u][v] )
          ok = false;
    if ( ok )
      return true;
  }
  return false;
}

bool composite( std::uint64_t k )
{
  for ( std::uint64_t d = 2; d * d <= k; ++d )
    if ( k % d == 0 )
      return true;
  return false;
}

} // namespace

TEST_CASE( "sum" )
{
  Circuit one = gen_sum( 1 );
  CHECK( one.size() == 0 );
  CHECK( one.num_outputs() == 1 );

  Circuit three = gen_sum( 3 );
  CHECK( three.size() == 5 );
  CHECK( truth_tables( three ) == truth_tables( adder7() ) );

  for ( std::size_t n : { 2u, 5u, 7u, 8u } )
    for ( Basis basis : { Basis::Bench, Basis::Aig } )
    {
      Circuit c = gen_sum( n, basis );
      c.check();
      CHECK( c.num_outputs() == std::bit_width( n ) );
      for_all( c, [&]( std::uint64_t x, const std::vector<bool>& out ) {
        REQUIRE( as_number( out ) == static_cast<std::uint64_t>( std::popcount( x ) ) );
      } );
    }
  CHECK( gen_sum( 20 ).size() <= 5 * 20 );
}

TEST_CASE( "thresholds" )
{
  Circuit zero = gen_atleast( 4, 0 );
  CHECK( zero.size() == 0 );
  CHECK( simulate( zero, { 0, 0, 0, 0 } ) == std::vector<bool>{ 1 } );

  Circuit any = gen_atleast( 4, 1 );
  CHECK( any.size() == 3 );
  for ( GateId id : any.topological_order() )
    if ( is_logic( any.kind( id ) ) )
      CHECK( any.kind( id ) == GateKind::Or );

  for ( std::size_t n = 1; n <= 10; ++n )
    for ( long k = 0; k <= static_cast<long>( n ) + 1; ++k )
    {
      Circuit ge = gen_atleast( n, k ), le = gen_atmost( n, k );
      auto tge = truth_tables( ge )[0], tle = truth_tables( le )[0];
      for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
      {
        REQUIRE( tge.bit( x ) == ( std::popcount( x ) >= k ) );
        REQUIRE( tle.bit( x ) == ( std::popcount( x ) <= k ) );
      }
    }
  CHECK_THROWS( gen_atleast( 3, 5 ) );
}

TEST_CASE( "pigeonhole" )
{
  CHECK_FALSE( satisfiable( gen_pigeonhole( 2, 1, 1 ) ) );
  Circuit one = gen_pigeonhole( 1, 1, 1 );
  CHECK( simulate( one, { 1 } ) == std::vector<bool>{ 1 } );
  for ( std::size_t n = 1; n <= 3; ++n )
    for ( std::size_t m = 1; m <= 3; ++m )
      for ( long k = 1; k <= 3; ++k )
      {
        Circuit c = gen_pigeonhole( n, m, k );
        REQUIRE( c.num_inputs() == n * m );
        REQUIRE( satisfiable( c ) == ( static_cast<long>( n ) <= static_cast<long>( m ) * k ) );
      }
}

TEST_CASE( "even colouring" )
{
  Graph parallel = parse_edge_list( "0 1\n0 1\n" );
  Circuit p = gen_even_colouring( parallel );
  CHECK( p.num_inputs() == 2 );
  CHECK( simulate( p, { 1, 0 } ) == std::vector<bool>{ 1 } );
  CHECK( simulate( p, { 1, 1 } ) == std::vector<bool>{ 0 } );

  Graph triangle = parse_edge_list( "# triangle\n0 1\n1 2\n\n2 0\n" );
  CHECK_FALSE( satisfiable( gen_even_colouring( triangle ) ) );

  CHECK_THROWS( gen_even_colouring( parse_edge_list( "0 1\n1 2\n" ) ) );

  /* 4-regular graphs have 2n edges; a disjoint triangle makes the count odd. */
  for ( std::uint64_t seed = 0; seed < 12; ++seed )
  {
    std::size_t n = 5 + seed % 2;
    Graph g = random_regular_graph( n, 4, seed );
    for ( auto d : g.degrees() )
      REQUIRE( d == 4 );
    if ( seed % 3 == 0 )
    {
      g.edges.push_back( { n, n + 1 } );
      g.edges.push_back( { n + 1, n + 2 } );
      g.edges.push_back( { n + 2, n } );
      g.vertices = n + 3;
    }
    REQUIRE( g.edges.size() <= 16 );
    REQUIRE( satisfiable( gen_even_colouring( g ) ) == ( g.edges.size() % 2 == 0 ) );
  }
}

TEST_CASE( "clique" )
{
  Graph triangle = parse_edge_list( "0 1\n1 2\n0 2\n" );
  Circuit t = gen_clique( triangle, 3 );
  CHECK( simulate( t, { 1, 1, 1 } ) == std::vector<bool>{ 1 } );

  Graph empty;
  empty.vertices = 3;
  CHECK_FALSE( satisfiable( gen_clique( empty, 2 ) ) );

  for ( std::uint64_t seed = 0; seed < 30; ++seed )
  {
    std::size_t n = 4 + seed % 7;
    Graph g = random_graph( n, 0.5, seed );
    std::size_t k = 2 + seed % 3;
    REQUIRE( satisfiable( gen_clique( g, k ) ) == has_clique( g, k ) );
  }
  CHECK_THROWS( gen_clique( triangle, 4 ) );
}

TEST_CASE( "factorization" )
{
  CHECK( satisfiable( gen_factorization( 4 ) ) );
  CHECK_FALSE( satisfiable( gen_factorization( 7 ) ) );
  for ( std::uint64_t k = 2; k <= 64; ++k )
    REQUIRE( satisfiable( gen_factorization( k ) ) == composite( k ) );
}

TEST_CASE( "multipliers" )
{
  Circuit one = gen_multiplier( 1, MultiplierMethod::Schoolbook );
  CHECK( one.size() == 1 );
  for ( std::size_t n = 1; n <= 6; ++n )
    for ( auto method : { MultiplierMethod::Schoolbook, MultiplierMethod::Karatsuba } )
    {
      Circuit c = gen_multiplier( n, method );
      REQUIRE( c.num_inputs() == 2 * n );
      REQUIRE( c.num_outputs() == 2 * n );
      for_all( c, [&]( std::uint64_t x, const std::vector<bool>& out ) {
        std::uint64_t a = x & ( ( 1u << n ) - 1 ), b = x >> n;
        REQUIRE( as_number( out ) == a * b );
      } );
    }
  CHECK( check_equiv( gen_multiplier( 2, MultiplierMethod::Schoolbook ),
                      gen_multiplier( 2, MultiplierMethod::Karatsuba ) )
             .verdict == Verdict::Equal );
}

TEST_CASE( "miter families are constant zero" )
{
  for ( auto family : { MiterFamily::Summation, MiterFamily::Threshold, MiterFamily::Multiplication } )
    for ( std::size_t n = 2; n <= 8; ++n )
    {
      if ( family == MiterFamily::Multiplication && n > 4 )
        continue;
      for ( Basis basis : { Basis::Bench, Basis::Aig } )
      {
        Circuit m = gen_miter_family( family, n, basis );
        m.check();
        REQUIRE( m.num_outputs() == 1 );
        REQUIRE_FALSE( satisfiable( m ) );
      }
    }
  CHECK( parse_miter_family( "summation" ) == MiterFamily::Summation );
  CHECK( parse_multiplier_method( "karatsuba" ) == MultiplierMethod::Karatsuba );
  CHECK_THROWS( parse_miter_family( "sorting" ) );
}

TEST_CASE( "edge lists" )
{
  Graph g = parse_edge_list( "0 3\n" );
  CHECK( g.vertices == 4 );
  CHECK_THROWS( parse_edge_list( "0\n" ) );
  CHECK_THROWS( parse_edge_list( "1 1\n" ) );
  CHECK_THROWS( random_regular_graph( 5, 3, 1 ) );
}
