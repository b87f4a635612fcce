#include "circsimp/benchgen.hpp"
#include "circsimp/builder.hpp"
#include "circsimp/equiv.hpp"
#include "circsimp/formats.hpp"
#include "circsimp/fundb.hpp"
#include "circsimp/rewrite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

using namespace circsimp;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitInconclusive = 4;

struct Globals
{
  unsigned threads = 1;
};

struct SimplifyArgs
{
  std::string in, out, db, report, basis = "auto", verify = "off";
  int iterations = 5;
  std::uint64_t seed = 1, vectors = 100000;
};

struct GendbArgs
{
  std::string basis, out;
  int max_size = 5;
  double time_budget = 0;
  bool stats = false;
};

struct CheckArgs
{
  std::string a, b, mode = "auto", cnf, solver;
  std::uint64_t vectors = 100000, seed = 1;
};

struct GenArgs
{
  std::string family, out, basis = "bench", method = "schoolbook", graph;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
};

struct ConvertArgs
{
  std::string in, out, basis = "auto";
};

Basis choose_basis( const std::string& flag, const Circuit& c )
{
  return flag == "auto" ? c.basis() : parse_basis( flag );
}

Circuit in_basis( Circuit c, Basis b )
{
  return c.basis() == b ? c : convert_basis( c, b );
}

std::string format_assignment( const Circuit& c, const std::vector<bool>& bits )
{
  std::string s;
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    const std::string* name = c.name( c.inputs()[i] );
    s += ( i ? " " : "" ) + ( name ? *name : "i" + std::to_string( i ) ) + "=" + ( bits[i] ? "1" : "0" );
  }
  return s;
}

int run_simplify( const SimplifyArgs& args, const Globals& g )
{
  if ( std::filesystem::exists( args.out ) && std::filesystem::equivalent( args.in, args.out ) )
  {
    std::cerr << "error: --out must differ from --in\n";
    return kExitError;
  }
  Circuit input = read_circuit_file( args.in );
  Circuit circuit = in_basis( input, choose_basis( args.basis, input ) );
  Database db = load_db_file( args.db );
  if ( db.basis() != circuit.basis() )
  {
    std::cerr << "error: database basis " << basis_name( db.basis() ) << " does not match circuit basis "
              << basis_name( circuit.basis() ) << "\n";
    return kExitError;
  }
  Circuit original = circuit;
  RewriteConfig config;
  config.iterations = args.iterations;
  config.seed = args.seed;
  config.database = &db;
  RewriteReport report = simplify( circuit, config );
  circuit.check();
  write_circuit_file( args.out, circuit );
  std::string text = format_report( report );
  std::cout << text;
  if ( !args.report.empty() )
    write_file( args.report, text );
  std::cerr << "time " << report.seconds << " s\n";

  if ( args.verify == "off" )
    return kExitOk;
  CheckOptions opts;
  opts.mode = args.verify == "exhaustive" ? CheckMode::Exhaustive : CheckMode::Random;
  opts.vectors = args.vectors;
  opts.seed = args.seed;
  opts.threads = g.threads;
  CheckResult r = check_equiv( original, circuit, opts );
  std::cout << "verify: " << verdict_name( r.verdict ) << "\n";
  if ( r.verdict == Verdict::Counterexample )
  {
    std::cout << "counterexample: " << format_assignment( original, r.counterexample ) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_gendb( const GendbArgs& args )
{
  BuildOptions opts;
  opts.max_size = args.max_size;
  opts.time_budget = args.time_budget;
  Database db = build_database( parse_basis( args.basis ), opts );
  save_db_file( db, args.out );
  for ( const auto& l : db.report().levels )
    std::cerr << "level " << l.size << ": " << l.states << " states, " << l.classes << " new entries"
              << ( l.complete ? "" : " (incomplete)" ) << "\n";
  if ( db.report().budget_exhausted )
    std::cerr << "time budget exhausted; database is partial\n";
  std::cerr << "time " << db.report().seconds << " s\n";
  if ( args.stats )
    std::cout << format_stats( db );
  return kExitOk;
}

int run_dbstats( const std::string& path )
{
  std::cout << format_stats( load_db_file( path ) );
  return kExitOk;
}

int run_check( const CheckArgs& args, const Globals& g )
{
  Circuit a = read_circuit_file( args.a );
  Circuit b = read_circuit_file( args.b );
  CheckOptions opts;
  opts.vectors = args.vectors;
  opts.seed = args.seed;
  opts.threads = g.threads;
  if ( args.mode == "auto" )
    opts.mode = a.num_inputs() <= opts.exhaustive_cap ? CheckMode::Exhaustive : CheckMode::Random;
  else
    opts.mode = args.mode == "exhaustive" ? CheckMode::Exhaustive : CheckMode::Random;

  std::string cnf_path = args.cnf;
  if ( !args.cnf.empty() || !args.solver.empty() )
  {
    if ( cnf_path.empty() )
      cnf_path = ( std::filesystem::temp_directory_path() / "circsimp-miter.cnf" ).string();
    write_file( cnf_path, export_cnf( miter( a, b ) ) );
  }

  CheckResult r = check_equiv( a, b, opts );
  if ( r.verdict == Verdict::Inconclusive && !args.solver.empty() )
  {
    auto sat = run_external_solver( args.solver, cnf_path );
    if ( sat.has_value() )
    {
      std::cout << ( *sat ? "counterexample (solver)\n" : "equal (solver)\n" );
      return *sat ? kExitCounterexample : kExitOk;
    }
    std::cerr << "solver gave no verdict\n";
  }
  std::cout << verdict_name( r.verdict ) << "\n";
  switch ( r.verdict )
  {
  case Verdict::Equal: return kExitOk;
  case Verdict::Counterexample:
    std::cout << "assignment: " << format_assignment( a, r.counterexample ) << "\n";
    return kExitCounterexample;
  default: return kExitInconclusive;
  }
}

long param( const std::vector<std::string>& p, std::size_t i, const char* what )
{
  if ( i >= p.size() )
    throw CLI::ValidationError( "gen", std::string( "missing parameter " ) + what );
  return std::stol( p[i] );
}

int run_gen( const GenArgs& args )
{
  Basis basis = parse_basis( args.basis );
  const auto& p = args.params;
  const std::string& f = args.family;
  Circuit c( basis );
  if ( f == "sum" )
    c = gen_sum( param( p, 0, "n" ), basis );
  else if ( f == "atleast" )
    c = gen_atleast( param( p, 0, "n" ), param( p, 1, "k" ), basis );
  else if ( f == "atmost" )
    c = gen_atmost( param( p, 0, "n" ), param( p, 1, "k" ), basis );
  else if ( f == "pigeonhole" )
    c = gen_pigeonhole( param( p, 0, "n" ), param( p, 1, "m" ), param( p, 2, "k" ), basis );
  else if ( f == "colouring" || f == "coloring" )
  {
    Graph gr = !args.graph.empty()
                   ? parse_edge_list( read_file( args.graph ) )
                   : random_regular_graph( param( p, 0, "vertices" ), param( p, 1, "degree" ), args.seed );
    c = gen_even_colouring( gr, basis );
  }
  else if ( f == "clique" )
  {
    std::size_t k = param( p, 0, "k" );
    Graph gr = !args.graph.empty() ? parse_edge_list( read_file( args.graph ) )
                                   : random_graph( param( p, 1, "vertices" ),
                                                   p.size() > 2 ? std::stod( p[2] ) : 0.5, args.seed );
    c = gen_clique( gr, k, basis );
  }
  else if ( f == "factorization" )
    c = gen_factorization( param( p, 0, "k" ), basis );
  else if ( f == "multiplier" )
    c = gen_multiplier( param( p, 0, "n" ), parse_multiplier_method( args.method ), basis );
  else if ( f == "miter" )
  {
    if ( p.empty() )
      throw CLI::ValidationError( "gen", "missing miter family" );
    c = gen_miter_family( parse_miter_family( p[0] ), param( p, 1, "n" ), basis );
  }
  else
    throw CLI::ValidationError( "gen", "unknown family '" + f + "'" );
  c.check();
  write_circuit_file( args.out, c );
  std::cout << "inputs " << c.num_inputs() << ", outputs " << c.num_outputs() << ", size " << c.size() << "\n";
  return kExitOk;
}

int run_convert( const ConvertArgs& args )
{
  Circuit c = read_circuit_file( args.in );
  Circuit out = in_basis( c, choose_basis( args.basis, c ) );
  write_circuit_file( args.out, out );
  return kExitOk;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Circuit simplification by 3-input subcircuit rewriting" };
  app.require_subcommand( 1 );
  Globals globals;
  app.add_option( "--threads", globals.threads, "Worker threads for checking" )->check( CLI::Range( 1u, 256u ) );

  SimplifyArgs sa;
  auto* simplify_cmd = app.add_subcommand( "simplify", "Simplify a circuit" );
  simplify_cmd->add_option( "--in", sa.in, "Input circuit" )->required()->check( CLI::ExistingFile );
  simplify_cmd->add_option( "--out", sa.out, "Output circuit" )->required();
  simplify_cmd->add_option( "--db", sa.db, "Database file" )->required();
  simplify_cmd->add_option( "--iterations", sa.iterations, "Rewriting passes" )->check( CLI::PositiveNumber );
  simplify_cmd->add_option( "--basis", sa.basis, "Working basis" )->check( CLI::IsMember( { "auto", "aig", "bench" } ) );
  simplify_cmd->add_option( "--report", sa.report, "Write the per-iteration report here" );
  simplify_cmd->add_option( "--seed", sa.seed, "Seed for random verification" );
  simplify_cmd->add_option( "--verify", sa.verify, "Check the result" )
      ->check( CLI::IsMember( { "exhaustive", "random", "off" } ) );
  simplify_cmd->add_option( "--vectors", sa.vectors, "Vectors for random verification" );

  GendbArgs ga;
  auto* gendb_cmd = app.add_subcommand( "gendb", "Build a database of small circuits" );
  gendb_cmd->add_option( "--basis", ga.basis, "Target basis" )->required()->check( CLI::IsMember( { "aig", "bench" } ) );
  gendb_cmd->add_option( "--max-size", ga.max_size, "Largest circuit size to enumerate" )
      ->required()
      ->check( CLI::Range( 0, 8 ) );
  gendb_cmd->add_option( "--out", ga.out, "Database file" )->required();
  gendb_cmd->add_option( "--time-budget", ga.time_budget, "Seconds, 0 for unlimited" );
  gendb_cmd->add_flag( "--stats", ga.stats, "Print classes and functions per size" );

  std::string stats_db;
  auto* stats_cmd = app.add_subcommand( "dbstats", "Print statistics of a database file" );
  stats_cmd->add_option( "db", stats_db, "Database file" )->required()->check( CLI::ExistingFile );

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand( "check", "Check two circuits for equivalence" );
  check_cmd->add_option( "a", ca.a, "First circuit" )->required()->check( CLI::ExistingFile );
  check_cmd->add_option( "b", ca.b, "Second circuit" )->required()->check( CLI::ExistingFile );
  check_cmd->add_option( "--mode", ca.mode, "Checking mode" )
      ->check( CLI::IsMember( { "auto", "exhaustive", "random" } ) );
  check_cmd->add_option( "--vectors", ca.vectors, "Random vectors" );
  check_cmd->add_option( "--seed", ca.seed, "Random seed" );
  check_cmd->add_option( "--cnf", ca.cnf, "Write the miter as DIMACS CNF" );
  check_cmd->add_option( "--solver", ca.solver, "SAT solver run on the CNF when simulation is inconclusive" );

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand( "gen", "Generate a benchmark circuit" );
  gen_cmd->add_option( "family", gen.family,
                       "sum | atleast | atmost | pigeonhole | colouring | clique | factorization | multiplier | miter" )
      ->required();
  gen_cmd->add_option( "params", gen.params, "Family parameters" );
  gen_cmd->add_option( "--out", gen.out, "Output circuit" )->required();
  gen_cmd->add_option( "--basis", gen.basis, "Target basis" )->check( CLI::IsMember( { "aig", "bench" } ) );
  gen_cmd->add_option( "--method", gen.method, "Multiplication method" )
      ->check( CLI::IsMember( { "schoolbook", "karatsuba" } ) );
  gen_cmd->add_option( "--graph", gen.graph, "Edge list for colouring or clique" )->check( CLI::ExistingFile );
  gen_cmd->add_option( "--seed", gen.seed, "Seed for random graphs" );

  ConvertArgs cv;
  auto* convert_cmd = app.add_subcommand( "convert", "Convert between BENCH and AIGER" );
  convert_cmd->add_option( "--in", cv.in, "Input circuit" )->required()->check( CLI::ExistingFile );
  convert_cmd->add_option( "--out", cv.out, "Output circuit" )->required();
  convert_cmd->add_option( "--basis", cv.basis, "Target basis" )->check( CLI::IsMember( { "auto", "aig", "bench" } ) );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return kExitError;
  }

  try
  {
    if ( *simplify_cmd )
      return run_simplify( sa, globals );
    if ( *gendb_cmd )
      return run_gendb( ga );
    if ( *stats_cmd )
      return run_dbstats( stats_db );
    if ( *check_cmd )
      return run_check( ca, globals );
    if ( *gen_cmd )
      return run_gen( gen );
    if ( *convert_cmd )
      return run_convert( cv );
  }
  catch ( const CLI::Error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
