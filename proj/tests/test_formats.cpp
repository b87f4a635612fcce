#include "test_support.hpp"

#include "circsimp/builder.hpp"
#include "circsimp/formats.hpp"

#include <doctest.h>

using namespace circsimp;
using namespace circsimp::test;

TEST_CASE( "read_bench basics" )
{
  Circuit c = read_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(c)\nc = AND(a, b)\n" );
  CHECK( c.num_inputs() == 2 );
  CHECK( c.num_outputs() == 1 );
  CHECK( c.size() == 1 );
  CHECK( truth_tables( c )[0].to_hex() == "8" );
}

TEST_CASE( "wide gates are folded into binary trees" )
{
  Circuit c = read_bench( "INPUT(a)\nINPUT(b)\nINPUT(c)\nOUTPUT(d)\nd = AND(a, b, c)\n" );
  CHECK( c.size() == 2 );
  CHECK( truth_tables( c )[0].to_hex() == "80" );
  Circuit n = read_bench( "INPUT(a)\nINPUT(b)\nINPUT(c)\nOUTPUT(d)\nd = NAND(a, b, c)\n" );
  CHECK( truth_tables( n )[0].to_hex() == "7f" );
}

TEST_CASE( "read_bench accepts any definition order and comments" )
{
  Circuit c = read_bench( "# adder\nINPUT(x)\nINPUT(y)\nOUTPUT(s)\ns = XOR(t, y) # late\nt = NOT(x)\n" );
  CHECK( c.size() == 2 );
  CHECK( truth_tables( c )[0].to_hex() == "9" );
}

TEST_CASE( "read_bench diagnostics carry line numbers" )
{
  auto line_of = []( const char* text ) {
    try
    {
      read_bench( text );
    }
    catch ( const ParseError& e )
    {
      return e.diagnostic().line;
    }
    return std::size_t{ 0 };
  };
  CHECK( line_of( "INPUT(a)\nOUTPUT(b)\nb = FOO(a)\n" ) == 3 );
  CHECK( line_of( "INPUT(a)\nOUTPUT(b)\nb = AND(a, c)\n" ) > 0 );
  CHECK( line_of( "INPUT(a)\nOUTPUT(b)\nb = AND(a, c)\nc = AND(a, b)\n" ) > 0 );
  CHECK( line_of( "INPUT(a)\nOUTPUT(b)\nb = NOT(a)\nb = NOT(a)\n" ) == 4 );
}

TEST_CASE( "closure example from BENCH text" )
{
  Circuit c = read_bench( write_bench( closure_example() ) );
  CHECK( c.num_inputs() == 4 );
  CHECK( c.size() == 5 );
  CHECK( truth_tables( c ) == truth_tables( closure_example() ) );
}

TEST_CASE( "write_bench of a single AND" )
{
  Circuit c = read_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(c)\nc = AND(a, b)\n" );
  CHECK( write_bench( c ) == "INPUT(a)\nINPUT(b)\nOUTPUT(c)\nc = AND(a, b)\n" );
}

TEST_CASE( "constants are written as self-XOR" )
{
  Circuit c;
  c.add_input( "i" );
  c.add_output( c.constant( false ), "z" );
  c.add_output( c.constant( true ), "o" );
  std::string text = write_bench( c );
  CHECK( text.find( "XOR(i, i)" ) != std::string::npos );
  CHECK( text.find( "XNOR(i, i)" ) != std::string::npos );
  Circuit back = read_bench( text );
  CHECK( truth_tables( back ) == truth_tables( c ) );
}

TEST_CASE( "bench round trip on random circuits" )
{
  for ( std::uint64_t seed = 0; seed < 30; ++seed )
  {
    Circuit c = random_circuit( Basis::Bench, 6, 25, 3, seed );
    Circuit back = read_bench( write_bench( c ) );
    REQUIRE( back.num_inputs() == c.num_inputs() );
    REQUIRE( back.num_outputs() == c.num_outputs() );
    REQUIRE( back.size() <= c.size() );
    REQUIRE( truth_tables( back ) == truth_tables( c ) );
    REQUIRE( write_bench( back ) == write_bench( read_bench( write_bench( back ) ) ) );
  }
}

TEST_CASE( "read_aiger ASCII" )
{
  Circuit neg = read_aiger( "aag 1 1 0 1 0\n2\n3\n" );
  CHECK( neg.num_inputs() == 1 );
  CHECK( neg.size() == 0 );
  CHECK( simulate( neg, { 0 } ) == std::vector<bool>{ 1 } );

  Circuit a = read_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n" );
  CHECK( a.size() == 1 );
  CHECK( truth_tables( a )[0].to_hex() == "8" );

  CHECK_THROWS_AS( read_aiger( "aag 1 0 1 0 0\n2 3\n" ), ParseError );
  CHECK_THROWS_AS( read_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 8 4\n" ), ParseError );
}

TEST_CASE( "binary twin equals ASCII" )
{
  std::string aag = "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n";
  CHECK( aag_to_aig( aag ) == std::string( "aig 3 2 0 1 1\n6\n\x02\x02", 18 ) );
  Circuit a = read_aiger( aag ), b = read_aiger( aag_to_aig( aag ) );
  CHECK( b.size() == 1 );
  CHECK( truth_tables( a ) == truth_tables( b ) );

  for ( std::uint64_t seed = 0; seed < 30; ++seed )
  {
    Circuit c = random_circuit( Basis::Aig, 7, 60, 3, seed );
    std::string text = write_aiger_ascii( c );
    Circuit from_ascii = read_aiger( text );
    Circuit from_binary = read_aiger( aag_to_aig( text ) );
    REQUIRE( truth_tables( from_ascii ) == truth_tables( c ) );
    REQUIRE( from_binary.size() == from_ascii.size() );
    REQUIRE( truth_tables( from_binary ) == truth_tables( c ) );
    REQUIRE( aag_to_aig( write_aiger_ascii( from_binary ) ) == aag_to_aig( text ) );
  }
}

TEST_CASE( "aiger symbols survive" )
{
  Circuit c = read_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\ni0 a\ni1 b\no0 y\nc\nanything\n" );
  CHECK( c.name( c.inputs()[1] ) );
  CHECK( *c.name( c.inputs()[1] ) == "b" );
  CHECK( c.output_name( 0 ) == "y" );
  CHECK( write_aiger_ascii( c ).find( "o0 y" ) != std::string::npos );
}

TEST_CASE( "format detection" )
{
  CHECK( detect_format( "x.bench", "" ) == FileFormat::Bench );
  CHECK( detect_format( "x.aag", "" ) == FileFormat::AigerAscii );
  CHECK( detect_format( "x", "aig 0 0 0 0 0\n" ) == FileFormat::AigerBinary );
  CHECK( detect_format( "x", "INPUT(a)\n" ) == FileFormat::Bench );
}

TEST_CASE( "basis conversion preserves tables" )
{
  for ( std::uint64_t seed = 0; seed < 20; ++seed )
  {
    Circuit bench = random_circuit( Basis::Bench, 6, 30, 3, seed );
    Circuit aig = convert_basis( bench, Basis::Aig );
    Circuit back = convert_basis( aig, Basis::Bench );
    aig.check();
    back.check();
    REQUIRE( truth_tables( aig ) == truth_tables( bench ) );
    REQUIRE( truth_tables( back ) == truth_tables( bench ) );
  }
}
