#include "test_support.hpp"

#include "circsimp/formats.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include <sys/wait.h>
#include <unistd.h>

using namespace circsimp;
using namespace circsimp::test;
namespace fs = std::filesystem;

namespace
{

struct Run
{
  int code = -1;
  std::string out;
};

Run cli( const std::string& args )
{
  std::string cmd = std::string( CIRCSIMP_CLI ) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen( cmd.c_str(), "r" );
  REQUIRE( pipe );
  char buf[4096];
  while ( std::size_t n = fread( buf, 1, sizeof buf, pipe ) )
    r.out.append( buf, n );
  int status = pclose( pipe );
  r.code = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
  return r;
}

struct Workdir
{
  fs::path root;

  Workdir()
  {
    root = fs::temp_directory_path() / ( "circsimp_cli_" + std::to_string( ::getpid() ) );
    fs::create_directories( root );
  }
  ~Workdir() { fs::remove_all( root ); }

  std::string path( const std::string& name ) const { return ( root / name ).string(); }
};

Workdir& work()
{
  static Workdir w;
  return w;
}

/* Small BENCH database shared by the tests below. */
const std::string& db_path()
{
  static std::string path = [] {
    std::string p = work().path( "bench5.simpdb" );
    save_db_file( bench_db(), p );
    return p;
  }();
  return path;
}

std::string two_input( const std::string& gate )
{
  return "INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = " + gate + "(a, b)\n";
}

} // namespace

TEST_CASE( "simplify the full adder" )
{
  std::string in = work().path( "fa.bench" ), out = work().path( "fa_out.bench" ), rep = work().path( "fa.txt" );
  write_file( in, write_bench( adder7() ) );
  Run r = cli( "simplify --in " + in + " --out " + out + " --db " + db_path() + " --report " + rep +
               " --verify exhaustive" );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "size 7 -> 5" ) != std::string::npos );
  CHECK( r.out.find( "verify: equal" ) != std::string::npos );
  Circuit c = read_circuit_file( out );
  CHECK( c.size() == 5 );
  CHECK( truth_tables( c ) == truth_tables( adder7() ) );
  CHECK( read_file( rep ).find( "iteration 1:" ) == 0 );
}

TEST_CASE( "simplify leaves minimal circuits unchanged" )
{
  std::string in = work().path( "and.bench" ), out = work().path( "and_out.bench" );
  write_file( in, two_input( "AND" ) );
  CHECK( cli( "simplify --iterations 1 --in " + in + " --out " + out + " --db " + db_path() ).code == 0 );
  CHECK( read_file( out ) == read_file( in ) );
}

TEST_CASE( "simplify errors" )
{
  std::string in = work().path( "and.bench" );
  write_file( in, two_input( "AND" ) );
  CHECK( cli( "simplify --in " + in + " --out " + work().path( "x.bench" ) + " --db " + work().path( "missing" ) )
             .code == 1 );
  CHECK( cli( "simplify --in " + in + " --out " + in + " --db " + db_path() ).code == 1 );
  CHECK( cli( "simplify --in " + in ).code == 1 );
  CHECK( cli( "frobnicate" ).code == 1 );
}

TEST_CASE( "gendb and dbstats" )
{
  std::string db = work().path( "b2.simpdb" );
  Run r = cli( "gendb --basis bench --max-size 2 --out " + db + " --stats" );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "2: " ) != std::string::npos );
  Run s = cli( "dbstats " + db );
  CHECK( s.code == 0 );
  CHECK( s.out == r.out );

  std::string empty = work().path( "b0.simpdb" );
  CHECK( cli( "gendb --basis aig --max-size 0 --out " + empty ).code == 0 );
  CHECK( load_db_file( empty ).num_classes() <= 8 );
  CHECK( cli( "gendb --basis aig --max-size 12 --out " + empty ).code == 1 );
}

TEST_CASE( "check exit codes" )
{
  std::string fa = work().path( "fa_l.bench" ), fb = work().path( "fa_r.bench" );
  write_file( fa, write_bench( adder7() ) );
  write_file( fb, write_bench( adder5() ) );
  CHECK( cli( "check " + fa + " " + fa ).code == 0 );
  CHECK( cli( "check " + fa + " " + fb ).code == 0 );

  std::string a = work().path( "and2.bench" ), o = work().path( "or2.bench" );
  write_file( a, two_input( "AND" ) );
  write_file( o, two_input( "OR" ) );
  Run r = cli( "check " + a + " " + o );
  CHECK( r.code == 3 );
  CHECK( r.out.find( "assignment:" ) != std::string::npos );
  CHECK( cli( "check " + a + " " + o + " --mode random --vectors 64" ).code == 3 );
  CHECK( cli( "check " + fa + " " + fb + " --mode random --vectors 64" ).code == 4 );
  CHECK( cli( "check " + fa + " " + a ).code == 1 );

  std::string cnf = work().path( "m.cnf" );
  CHECK( cli( "check " + a + " " + o + " --cnf " + cnf ).code == 3 );
  CHECK( read_file( cnf ).find( "p cnf" ) != std::string::npos );
}

TEST_CASE( "gen and convert" )
{
  std::string ph = work().path( "ph.bench" );
  CHECK( cli( "gen pigeonhole 2 1 1 --out " + ph ).code == 0 );
  Circuit c = read_circuit_file( ph );
  CHECK( truth_tables( c )[0].words()[0] == 0 );

  std::string sb = work().path( "m_s.bench" ), kb = work().path( "m_k.bench" );
  CHECK( cli( "gen multiplier 2 --method schoolbook --out " + sb ).code == 0 );
  CHECK( cli( "gen multiplier 2 --method karatsuba --out " + kb ).code == 0 );
  CHECK( cli( "check " + sb + " " + kb ).code == 0 );

  std::string aag = work().path( "m.aag" ), back = work().path( "m_back.bench" );
  CHECK( cli( "convert --in " + sb + " --out " + aag ).code == 0 );
  CHECK( read_file( aag ).rfind( "aag ", 0 ) == 0 );
  CHECK( cli( "convert --in " + aag + " --out " + back ).code == 0 );
  CHECK( cli( "check " + sb + " " + back ).code == 0 );

  CHECK( cli( "gen nosuchfamily 3 --out " + ph ).code == 1 );
  CHECK( cli( "gen pigeonhole 2 --out " + ph ).code == 1 );
}

TEST_CASE( "convert round trip on random circuits" )
{
  for ( std::uint64_t seed = 0; seed < 5; ++seed )
  {
    std::string in = work().path( "r.bench" ), mid = work().path( "r.aag" ), out = work().path( "r2.bench" );
    Circuit c = random_circuit( Basis::Bench, 8, 40, 3, seed );
    write_file( in, write_bench( c ) );
    REQUIRE( cli( "convert --in " + in + " --out " + mid ).code == 0 );
    REQUIRE( cli( "convert --in " + mid + " --out " + out ).code == 0 );
    REQUIRE( truth_tables( read_circuit_file( out ) ) == truth_tables( c ) );
  }
}

TEST_CASE( "simplify is reproducible from the command line" )
{
  std::string in = work().path( "mm.bench" );
  CHECK( cli( "gen miter multiplication 4 --out " + in ).code == 0 );
  std::string o1 = work().path( "mm1.bench" ), o2 = work().path( "mm2.bench" );
  Run r1 = cli( "simplify --seed 3 --in " + in + " --out " + o1 + " --db " + db_path() );
  Run r2 = cli( "simplify --seed 3 --in " + in + " --out " + o2 + " --db " + db_path() );
  CHECK( r1.code == 0 );
  CHECK( r1.out == r2.out );
  CHECK( read_file( o1 ) == read_file( o2 ) );
}
