#include "test_support.hpp"

#include "circsimp/preprocess.hpp"

#include <doctest.h>

using namespace circsimp;
using namespace circsimp::test;

TEST_CASE( "remove_dangling" )
{
  Circuit left = dangling_example();
  GateId a = id_of( left, "a" );
  CHECK( remove_dangling( left ) == 1 );
  CHECK( left.size() == 2 );
  CHECK_FALSE( left.alive( a ) );

  Circuit adder = adder5();
  CHECK( remove_dangling( adder ) == 0 );

  Circuit chain = adder5();
  GateId x = chain.inputs()[0];
  GateId g = chain.add_gate( GateKind::Not, { sig( x ) } );
  for ( int i = 0; i < 4; ++i )
    g = chain.add_gate( GateKind::And, { sig( g ), sig( x ) } );
  CHECK( remove_dangling( chain ) == 5 );
  CHECK( chain.size() == 5 );
}

TEST_CASE( "merge_duplicates" )
{
  Circuit right = duplicate_example();
  CHECK( merge_duplicates( right ) == 1 );
  remove_dangling( right );
  CHECK( right.size() == 5 );
  CHECK( truth_tables( right ) == truth_tables( duplicate_example() ) );

  Circuit comm;
  GateId a = comm.add_input(), b = comm.add_input();
  GateId g1 = comm.add_gate( GateKind::And, { sig( a ), sig( b ) } );
  GateId g2 = comm.add_gate( GateKind::And, { sig( b ), sig( a ) } );
  comm.add_output( sig( g1 ) );
  comm.add_output( sig( g2 ) );
  CHECK( merge_duplicates( comm ) == 1 );
  CHECK( comm.size() == 1 );

  Circuit adder = adder5();
  CHECK( merge_duplicates( adder ) == 0 );
}

TEST_CASE( "merge_duplicates cascades" )
{
  Circuit c;
  GateId a = c.add_input(), b = c.add_input();
  GateId p = c.add_gate( GateKind::Or, { sig( a ), sig( b ) } );
  GateId q = c.add_gate( GateKind::Or, { sig( b ), sig( a ) } );
  GateId r = c.add_gate( GateKind::Not, { sig( p ) } );
  GateId s = c.add_gate( GateKind::Not, { sig( q ) } );
  c.add_output( sig( c.add_gate( GateKind::Xor, { sig( r ), sig( s ) } ) ) );
  merge_duplicates( c );
  remove_dangling( c );
  CHECK( c.size() == 3 );
}

TEST_CASE( "local rules" )
{
  SUBCASE( "x xor x is constant" )
  {
    Circuit c;
    GateId x = c.add_input();
    c.add_output( sig( c.add_gate( GateKind::Xor, { sig( x ), sig( x ) } ) ) );
    CHECK( apply_local_rules( c ) > 0 );
    remove_dangling( c );
    CHECK( c.size() == 0 );
    CHECK( c.kind( c.outputs()[0].id ) == GateKind::Const0 );
  }
  SUBCASE( "x and 1 is x" )
  {
    Circuit c;
    GateId x = c.add_input();
    Signal one = c.constant( true );
    c.add_output( sig( c.add_gate( GateKind::And, { sig( x ), one } ) ) );
    apply_local_rules( c );
    remove_dangling( c );
    CHECK( c.size() == 0 );
    CHECK( c.outputs()[0] == sig( x ) );
  }
  SUBCASE( "AIG complement pair" )
  {
    Circuit c( Basis::Aig );
    GateId x = c.add_input();
    c.add_output( sig( c.add_gate( GateKind::And, { sig( x ), sig( x, true ) } ) ) );
    apply_local_rules( c );
    remove_dangling( c );
    CHECK( c.size() == 0 );
    CHECK( simulate( c, { 1 } ) == std::vector<bool>{ 0 } );
  }
}

TEST_CASE( "preprocess preserves tables on random circuits" )
{
  for ( std::uint64_t seed = 0; seed < 60; ++seed )
  {
    Basis basis = seed % 2 ? Basis::Aig : Basis::Bench;
    Circuit c = random_circuit( basis, 6, 30, 3, seed );
    /* inject constants and duplicates */
    Signal k = c.constant( seed % 3 == 0 );
    GateId any = c.inputs()[seed % 6];
    GateId extra = c.add_gate( GateKind::And, { k, sig( any ) } );
    c.set_output( 0, sig( c.add_gate( GateKind::And, { c.outputs()[0], sig( extra, basis == Basis::Aig ) } ) ) );
    auto before = truth_tables( c );
    auto counts = preprocess( c );
    c.check();
    REQUIRE( truth_tables( c ) == before );
    REQUIRE( counts.total() > 0 );
    REQUIRE( preprocess( c ).total() == 0 );
  }
}
