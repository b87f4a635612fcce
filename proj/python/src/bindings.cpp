#include "circsimp/benchgen.hpp"
#include "circsimp/builder.hpp"
#include "circsimp/circuit.hpp"
#include "circsimp/equiv.hpp"
#include "circsimp/formats.hpp"
#include "circsimp/fundb.hpp"
#include "circsimp/preprocess.hpp"
#include "circsimp/rewrite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace circsimp;

namespace
{

std::vector<std::string> tables_hex( const Circuit& c )
{
  std::vector<std::string> out;
  for ( const auto& t : truth_tables( c ) )
    out.push_back( t.to_hex() );
  return out;
}

py::dict simplify_py( Circuit& c, const Database& db, int iterations, std::uint64_t seed )
{
  RewriteConfig cfg;
  cfg.database = &db;
  cfg.iterations = iterations;
  cfg.seed = seed;
  RewriteReport r;
  {
    py::gil_scoped_release release;
    r = simplify( c, cfg );
  }
  py::dict d;
  d["initial_size"] = r.initial_size;
  d["final_size"] = r.final_size;
  d["iterations"] = r.iterations.size();
  d["report"] = format_report( r );
  return d;
}

py::tuple check_py( const Circuit& a, const Circuit& b, const std::string& mode, std::uint64_t vectors,
                    std::uint64_t seed )
{
  CheckOptions o;
  o.mode = mode == "random" ? CheckMode::Random : CheckMode::Exhaustive;
  if ( mode != "random" && mode != "exhaustive" )
    throw std::invalid_argument( "mode must be 'exhaustive' or 'random'" );
  o.vectors = vectors;
  o.seed = seed;
  CheckResult r;
  {
    py::gil_scoped_release release;
    r = check_equiv( a, b, o );
  }
  py::object cex = py::none();
  if ( r.verdict == Verdict::Counterexample )
    cex = py::cast( r.counterexample );
  return py::make_tuple( verdict_name( r.verdict ), cex );
}

} // namespace

PYBIND11_MODULE( _circsimp, m )
{
  m.doc() = "Circuit simplification by database-driven subcircuit replacement";

  py::register_exception<CircuitError>( m, "CircuitError", PyExc_ValueError );
  py::register_exception<ParseError>( m, "ParseError", PyExc_ValueError );

  py::enum_<Basis>( m, "Basis" ).value( "BENCH", Basis::Bench ).value( "AIG", Basis::Aig );

  py::class_<Circuit>( m, "Circuit" )
      .def_property_readonly( "basis", &Circuit::basis )
      .def_property_readonly( "num_inputs", &Circuit::num_inputs )
      .def_property_readonly( "num_outputs", &Circuit::num_outputs )
      .def_property_readonly( "size", &Circuit::size )
      .def( "truth_tables", &tables_hex, "Output truth tables as hex strings, x1 as the lowest bit." )
      .def( "simulate", []( const Circuit& c, const std::vector<bool>& x ) { return simulate( c, x ); } )
      .def( "copy", []( const Circuit& c ) { return Circuit( c ); } )
      .def( "__repr__", []( const Circuit& c ) {
        return "<Circuit " + std::string( basis_name( c.basis() ) ) + " inputs=" + std::to_string( c.num_inputs() ) +
               " outputs=" + std::to_string( c.num_outputs() ) + " size=" + std::to_string( c.size() ) + ">";
      } );

  m.def( "read_bench", []( const std::string& text ) { return read_bench( text ); } );
  m.def( "write_bench", &write_bench );
  m.def( "read_aiger", []( const py::bytes& data ) { return read_aiger( std::string( data ) ); } );
  m.def( "write_aiger", &write_aiger_ascii );
  m.def( "read_file", &read_circuit_file );
  m.def( "write_file", &write_circuit_file );
  m.def( "convert_basis", &convert_basis );

  m.def( "preprocess", []( Circuit& c ) {
    PreprocessCounts p = preprocess( c );
    py::dict d;
    d["dangling"] = p.dangling;
    d["merged"] = p.merged;
    d["rewritten"] = p.rewritten;
    return d;
  } );

  py::class_<Database>( m, "Database" )
      .def_property_readonly( "basis", &Database::basis )
      .def_property_readonly( "cap", &Database::cap )
      .def_property_readonly( "num_classes", &Database::num_classes )
      .def( "stats", []( const Database& db ) { return format_stats( db ); } )
      .def( "save", []( const Database& db, const std::string& path ) { save_db_file( db, path ); } )
      .def( "lookup", []( const Database& db, const TruthTriple& t ) -> py::object {
        auto f = lookup( db, t );
        if ( !f )
          return py::none();
        return py::int_( f->size );
      } );

  m.def(
      "build_database",
      []( Basis basis, int max_size, double time_budget ) {
        py::gil_scoped_release release;
        return build_database( basis, { max_size, time_budget } );
      },
      py::arg( "basis" ), py::arg( "max_size" ) = 5, py::arg( "time_budget" ) = 0.0 );
  m.def( "load_database", &load_db_file );

  m.def( "simplify", &simplify_py, py::arg( "circuit" ), py::arg( "database" ), py::arg( "iterations" ) = 5,
         py::arg( "seed" ) = 0, "Simplifies the circuit in place and returns a summary." );
  m.def( "check_equiv", &check_py, py::arg( "a" ), py::arg( "b" ), py::arg( "mode" ) = "exhaustive",
         py::arg( "vectors" ) = 100000, py::arg( "seed" ) = 1,
         "Returns (verdict, counterexample or None)." );
  m.def( "miter", &miter );
  m.def( "export_cnf", &export_cnf );

  m.def( "gen_sum", &gen_sum, py::arg( "n" ), py::arg( "basis" ) = Basis::Bench );
  m.def( "gen_atleast", &gen_atleast, py::arg( "n" ), py::arg( "k" ), py::arg( "basis" ) = Basis::Bench );
  m.def( "gen_atmost", &gen_atmost, py::arg( "n" ), py::arg( "k" ), py::arg( "basis" ) = Basis::Bench );
  m.def( "gen_pigeonhole", &gen_pigeonhole, py::arg( "n" ), py::arg( "m" ), py::arg( "k" ),
         py::arg( "basis" ) = Basis::Bench );
  m.def( "gen_factorization", &gen_factorization, py::arg( "k" ), py::arg( "basis" ) = Basis::Bench );
  m.def(
      "gen_multiplier",
      []( std::size_t n, const std::string& method, Basis basis ) {
        return gen_multiplier( n, parse_multiplier_method( method ), basis );
      },
      py::arg( "n" ), py::arg( "method" ) = "schoolbook", py::arg( "basis" ) = Basis::Bench );
  m.def(
      "gen_miter",
      []( const std::string& family, std::size_t n, Basis basis ) {
        return gen_miter_family( parse_miter_family( family ), n, basis );
      },
      py::arg( "family" ), py::arg( "n" ), py::arg( "basis" ) = Basis::Bench );
}
