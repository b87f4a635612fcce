#include "circsimp/formats.hpp"

#include "circsimp/builder.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace circsimp
{

ParseError::ParseError( ParseDiagnostic diag )
    : std::runtime_error( diag.line ? "line " + std::to_string( diag.line ) + ": " + diag.message : diag.message ),
      diag_( std::move( diag ) )
{
}

namespace
{

[[noreturn]] void fail( std::size_t line, const std::string& message )
{
  throw ParseError( { line, message, Severity::Error } );
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

std::string upper( std::string_view s )
{
  std::string out( s );
  for ( auto& c : out )
    c = static_cast<char>( std::toupper( static_cast<unsigned char>( c ) ) );
  return out;
}

struct BenchDef
{
  std::string kind;
  std::vector<std::string> args;
  std::size_t line;
};

/* Parses `KEYWORD(args)`; returns false when the text has no parenthesis. */
bool split_call( std::string_view text, std::size_t line, std::string& head, std::vector<std::string>& args )
{
  auto open = text.find( '(' );
  if ( open == std::string_view::npos )
    return false;
  auto close = text.rfind( ')' );
  if ( close == std::string_view::npos || close < open || !trim( text.substr( close + 1 ) ).empty() )
    fail( line, "malformed parentheses" );
  head = std::string( trim( text.substr( 0, open ) ) );
  args.clear();
  std::string_view inner = trim( text.substr( open + 1, close - open - 1 ) );
  if ( inner.empty() )
    return true;
  std::size_t start = 0;
  while ( true )
  {
    auto comma = inner.find( ',', start );
    auto piece = trim( inner.substr( start, comma == std::string_view::npos ? std::string_view::npos : comma - start ) );
    if ( piece.empty() )
      fail( line, "empty operand" );
    args.emplace_back( piece );
    if ( comma == std::string_view::npos )
      break;
    start = comma + 1;
  }
  return true;
}

struct GateToken
{
  GateKind base;
  bool negate;
  bool alias;
};

bool lookup_token( const std::string& token, GateToken& out )
{
  static const std::unordered_map<std::string, GateToken> table = {
      { "AND", { GateKind::And, false, false } },   { "NAND", { GateKind::And, true, false } },
      { "OR", { GateKind::Or, false, false } },     { "NOR", { GateKind::Or, true, false } },
      { "XOR", { GateKind::Xor, false, false } },   { "XNOR", { GateKind::Xor, true, false } },
      { "NXOR", { GateKind::Xor, true, false } },   { "NOT", { GateKind::Not, false, false } },
      { "BUF", { GateKind::Not, false, true } },    { "BUFF", { GateKind::Not, false, true } },
      { "CONST0", { GateKind::Const0, false, false } }, { "GND", { GateKind::Const0, false, false } },
      { "CONST1", { GateKind::Const1, false, false } }, { "VDD", { GateKind::Const1, false, false } } };
  auto it = table.find( token );
  if ( it == table.end() )
    return false;
  out = it->second;
  return true;
}

GateKind negated_kind( GateKind k )
{
  switch ( k )
  {
  case GateKind::And: return GateKind::Nand;
  case GateKind::Or: return GateKind::Nor;
  case GateKind::Xor: return GateKind::Nxor;
  default: return k;
  }
}

} // namespace

Circuit read_bench( std::string_view text, std::vector<ParseDiagnostic>* warnings )
{
  std::vector<std::pair<std::string, std::size_t>> input_names, output_names;
  std::unordered_map<std::string, BenchDef> defs;
  std::vector<std::string> def_order;
  std::unordered_set<std::string> declared_inputs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto eol = text.find( '\n', pos );
    std::string_view line = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
      line = line.substr( 0, hash );
    line = trim( line );
    if ( line.empty() )
      continue;

    std::string head;
    std::vector<std::string> args;
    auto eq = line.find( '=' );
    if ( eq == std::string_view::npos )
    {
      if ( !split_call( line, line_no, head, args ) )
        fail( line_no, "unrecognized line" );
      std::string kw = upper( head );
      if ( args.size() != 1 )
        fail( line_no, kw + " takes exactly one name" );
      if ( kw == "INPUT" )
      {
        if ( declared_inputs.count( args[0] ) )
          fail( line_no, "duplicate definition of '" + args[0] + "'" );
        declared_inputs.insert( args[0] );
        input_names.emplace_back( args[0], line_no );
      }
      else if ( kw == "OUTPUT" )
        output_names.emplace_back( args[0], line_no );
      else
        fail( line_no, "unknown declaration '" + head + "'" );
      continue;
    }

    std::string lhs( trim( line.substr( 0, eq ) ) );
    if ( lhs.empty() )
      fail( line_no, "missing gate name" );
    if ( !split_call( trim( line.substr( eq + 1 ) ), line_no, head, args ) )
      fail( line_no, "missing gate call" );
    std::string token = upper( head );
    GateToken tok;
    if ( !lookup_token( token, tok ) )
      fail( line_no, "unknown gate '" + head + "'" );
    if ( defs.count( lhs ) || declared_inputs.count( lhs ) )
      fail( line_no, "duplicate definition of '" + lhs + "'" );
    std::size_t want_min = ( tok.base == GateKind::Const0 || tok.base == GateKind::Const1 ) ? 0 : 1;
    if ( tok.base == GateKind::Const0 || tok.base == GateKind::Const1 )
    {
      if ( !args.empty() )
        fail( line_no, token + " takes no operands" );
    }
    else if ( tok.base == GateKind::Not )
    {
      if ( args.size() != 1 )
        fail( line_no, token + " takes exactly one operand" );
    }
    else if ( args.size() < want_min )
      fail( line_no, token + " needs operands" );
    defs[lhs] = BenchDef{ token, std::move( args ), line_no };
    def_order.push_back( lhs );
  }

  Circuit c( Basis::Bench );
  std::unordered_map<std::string, Signal> resolved;
  for ( auto& [name, line] : input_names )
  {
    (void)line;
    resolved[name] = { c.add_input( name ), false };
  }

  std::unordered_set<std::string> in_progress;
  auto resolve = [&]( const std::string& root, std::size_t ref_line ) -> Signal {
    if ( auto it = resolved.find( root ); it != resolved.end() )
      return it->second;
    // Explicit stack: netlists can be deep.
    struct Frame
    {
      std::string name;
      std::size_t next;
    };
    std::vector<Frame> stack;
    auto push = [&]( const std::string& name, std::size_t line ) {
      auto it = defs.find( name );
      if ( it == defs.end() )
        fail( line, "undefined name '" + name + "'" );
      if ( in_progress.count( name ) )
        fail( it->second.line, "cyclic definition involving '" + name + "'" );
      in_progress.insert( name );
      stack.push_back( { name, 0 } );
    };
    push( root, ref_line );
    while ( !stack.empty() )
    {
      Frame& fr = stack.back();
      const BenchDef& def = defs.at( fr.name );
      if ( fr.next < def.args.size() )
      {
        const std::string& arg = def.args[fr.next++];
        if ( !resolved.count( arg ) )
          push( arg, def.line );
        continue;
      }
      GateToken tok;
      lookup_token( def.kind, tok );
      std::vector<Signal> ops;
      for ( auto& a : def.args )
        ops.push_back( resolved.at( a ) );
      Signal result;
      bool fresh = true;
      if ( tok.base == GateKind::Const0 || tok.base == GateKind::Const1 )
        result = { c.add_gate( tok.base, {} ), false };
      else if ( tok.alias )
      {
        result = ops[0];
        fresh = false;
      }
      else if ( tok.base == GateKind::Not )
        result = { c.add_gate( GateKind::Not, { ops[0] } ), false };
      else if ( ops.size() == 1 )
      {
        if ( tok.negate )
          result = { c.add_gate( GateKind::Not, { ops[0] } ), false };
        else
        {
          result = ops[0];
          fresh = false;
          if ( warnings )
            warnings->push_back( { def.line, "single-operand " + def.kind + " treated as a wire", Severity::Warning } );
        }
      }
      else
      {
        Signal acc = ops[0];
        for ( std::size_t i = 1; i < ops.size(); ++i )
        {
          bool last = i + 1 == ops.size();
          GateKind k = last && tok.negate ? negated_kind( tok.base ) : tok.base;
          acc = { c.add_gate( k, { acc, ops[i] } ), false };
        }
        result = acc;
      }
      if ( fresh )
        c.set_name( result.id, fr.name );
      resolved[fr.name] = result;
      in_progress.erase( fr.name );
      stack.pop_back();
    }
    return resolved.at( root );
  };

  for ( const auto& name : def_order )
    resolve( name, defs.at( name ).line );
  for ( auto& [name, line] : output_names )
    c.add_output( resolve( name, line ), name );
  return c;
}

std::string write_bench( const Circuit& circuit )
{
  if ( circuit.basis() != Basis::Bench )
    throw CircuitError( "write_bench needs a BENCH-basis circuit" );

  std::unordered_map<GateId, std::string> emitted;
  std::unordered_set<std::string> used;
  // Existing names stay reserved so generated ones never collide.
  std::unordered_set<std::string> reserved;
  for ( GateId id = 0; id < circuit.capacity(); ++id )
    if ( circuit.alive( id ) )
      if ( auto* n = circuit.name( id ) )
        reserved.insert( *n );
  for ( std::size_t i = 0; i < circuit.num_outputs(); ++i )
    if ( !circuit.output_name( i ).empty() )
      reserved.insert( circuit.output_name( i ) );

  auto fresh_name = [&]( const std::string& stem ) {
    std::string candidate = stem;
    while ( used.count( candidate ) || reserved.count( candidate ) )
      candidate += "_";
    used.insert( candidate );
    return candidate;
  };
  auto claim = [&]( GateId id, const std::string& name ) {
    emitted[id] = name;
    used.insert( name );
  };

  for ( std::size_t i = 0; i < circuit.num_inputs(); ++i )
  {
    GateId id = circuit.inputs()[i];
    if ( auto* n = circuit.name( id ); n && !used.count( *n ) )
      claim( id, *n );
    else
      emitted[id] = fresh_name( "i" + std::to_string( i + 1 ) );
  }

  // Output names become gate names when nothing else owns them.
  std::vector<std::string> out_labels( circuit.num_outputs() );
  for ( std::size_t i = 0; i < circuit.num_outputs(); ++i )
  {
    const std::string& on = circuit.output_name( i );
    GateId d = circuit.outputs()[i].id;
    if ( on.empty() || emitted.count( d ) )
      continue;
    auto owner = circuit.find( on );
    if ( ( owner && *owner != d ) || used.count( on ) )
      continue;
    auto* dn = circuit.name( d );
    if ( dn && *dn != on )
      continue;
    claim( d, on );
  }

  std::vector<GateId> order = circuit.topological_order();
  for ( GateId id : order )
  {
    if ( emitted.count( id ) )
      continue;
    if ( auto* n = circuit.name( id ); n && !used.count( *n ) )
      claim( id, *n );
    else
      emitted[id] = fresh_name( "n" + std::to_string( id ) );
  }

  std::vector<std::string> buffers;
  for ( std::size_t i = 0; i < circuit.num_outputs(); ++i )
  {
    const std::string& on = circuit.output_name( i );
    const std::string& dn = emitted.at( circuit.outputs()[i].id );
    if ( on.empty() || on == dn )
    {
      out_labels[i] = dn;
      continue;
    }
    auto owner = circuit.find( on );
    bool clash = used.count( on ) || ( owner && circuit.alive( *owner ) );
    std::string label = clash ? fresh_name( on ) : on;
    if ( !clash )
      used.insert( label );
    out_labels[i] = label;
    buffers.push_back( label + " = BUFF(" + dn + ")" );
  }

  std::ostringstream out;
  for ( GateId id : circuit.inputs() )
    out << "INPUT(" << emitted.at( id ) << ")\n";
  for ( auto& label : out_labels )
    out << "OUTPUT(" << label << ")\n";
  for ( GateId id : order )
  {
    const Gate& g = circuit.gate( id );
    switch ( g.kind )
    {
    case GateKind::Input:
      break;
    case GateKind::Const0:
    case GateKind::Const1:
    {
      if ( circuit.inputs().empty() )
        throw CircuitError( "a constant gate can only be written when the circuit has an input" );
      const std::string& i0 = emitted.at( circuit.inputs()[0] );
      out << emitted.at( id ) << ( g.kind == GateKind::Const0 ? " = XOR(" : " = XNOR(" ) << i0 << ", " << i0
          << ")\n";
      break;
    }
    case GateKind::Not:
      out << emitted.at( id ) << " = NOT(" << emitted.at( g.fanins[0].id ) << ")\n";
      break;
    default:
      out << emitted.at( id ) << " = " << kind_name( g.kind ) << "(" << emitted.at( g.fanins[0].id ) << ", "
          << emitted.at( g.fanins[1].id ) << ")\n";
    }
  }
  for ( auto& b : buffers )
    out << b << "\n";
  return out.str();
}

namespace
{

class AigerReader
{
public:
  explicit AigerReader( std::string_view bytes ) : data_( bytes ) {}

  Circuit parse();

private:
  std::string_view next_line();
  std::uint64_t parse_uint( std::string_view token );
  std::vector<std::uint64_t> parse_uints( std::string_view line, std::size_t count );
  std::uint64_t decode_varint();
  Signal literal( std::uint64_t lit );
  void check_literal( std::uint64_t lit );

  std::string_view data_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::uint64_t max_var_ = 0;
  Circuit circuit_{ Basis::Aig };
  std::vector<Signal> vars_;
  std::vector<std::array<std::uint64_t, 2>> and_defs_;
  std::vector<char> state_;
};

std::string_view AigerReader::next_line()
{
  if ( pos_ >= data_.size() )
    fail( line_ + 1, "unexpected end of file" );
  auto eol = data_.find( '\n', pos_ );
  std::string_view line = data_.substr( pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_ );
  pos_ = eol == std::string_view::npos ? data_.size() : eol + 1;
  ++line_;
  if ( !line.empty() && line.back() == '\r' )
    line.remove_suffix( 1 );
  return line;
}

std::uint64_t AigerReader::parse_uint( std::string_view token )
{
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc() || ptr != token.data() + token.size() )
    fail( line_, "expected an unsigned integer, got '" + std::string( token ) + "'" );
  return value;
}

std::vector<std::uint64_t> AigerReader::parse_uints( std::string_view line, std::size_t count )
{
  std::vector<std::uint64_t> values;
  std::size_t p = 0;
  while ( p < line.size() )
  {
    while ( p < line.size() && line[p] == ' ' )
      ++p;
    if ( p >= line.size() )
      break;
    auto end = line.find( ' ', p );
    values.push_back( parse_uint( line.substr( p, end == std::string_view::npos ? std::string_view::npos : end - p ) ) );
    p = end == std::string_view::npos ? line.size() : end;
  }
  if ( values.size() != count )
    fail( line_, "expected " + std::to_string( count ) + " numbers" );
  return values;
}

std::uint64_t AigerReader::decode_varint()
{
  std::uint64_t value = 0;
  for ( unsigned shift = 0;; shift += 7 )
  {
    if ( pos_ >= data_.size() )
      fail( line_, "malformed delta encoding: truncated" );
    if ( shift > 63 )
      fail( line_, "malformed delta encoding: too long" );
    auto byte = static_cast<unsigned char>( data_[pos_++] );
    value |= std::uint64_t( byte & 0x7f ) << shift;
    if ( !( byte & 0x80 ) )
      return value;
  }
}

void AigerReader::check_literal( std::uint64_t lit )
{
  if ( ( lit >> 1 ) > max_var_ )
    fail( line_, "literal " + std::to_string( lit ) + " out of range" );
}

Signal AigerReader::literal( std::uint64_t lit )
{
  std::uint64_t var = lit >> 1;
  bool neg = lit & 1;
  if ( var == 0 )
    return circuit_.constant( neg );
  if ( state_[var] == 0 )
  {
    // Iterative post-order over undefined AND variables.
    std::vector<std::uint64_t> stack{ var };
    while ( !stack.empty() )
    {
      std::uint64_t v = stack.back();
      if ( state_[v] == 2 )
      {
        stack.pop_back();
        continue;
      }
      if ( and_defs_[v][0] == UINT64_MAX )
        fail( line_, "variable " + std::to_string( v ) + " is used but never defined" );
      state_[v] = 1;
      bool ready = true;
      for ( int k = 0; k < 2; ++k )
      {
        std::uint64_t w = and_defs_[v][k] >> 1;
        if ( w == 0 || state_[w] == 2 )
          continue;
        if ( state_[w] == 1 )
          fail( line_, "cyclic AND definitions" );
        stack.push_back( w );
        ready = false;
      }
      if ( !ready )
        continue;
      Signal ops[2];
      for ( int k = 0; k < 2; ++k )
      {
        std::uint64_t l = and_defs_[v][k];
        ops[k] = ( l >> 1 ) == 0 ? circuit_.constant( l & 1 ) : vars_[l >> 1] ^ bool( l & 1 );
      }
      vars_[v] = { circuit_.add_gate( GateKind::And, { ops[0], ops[1] } ), false };
      state_[v] = 2;
      stack.pop_back();
    }
  }
  return vars_[var] ^ neg;
}

Circuit AigerReader::parse()
{
  std::string_view header = next_line();
  bool binary;
  if ( header.substr( 0, 4 ) == "aag " )
    binary = false;
  else if ( header.substr( 0, 4 ) == "aig " )
    binary = true;
  else
    fail( line_, "missing aag/aig header" );
  std::string_view counts = header.substr( 4 );
  std::vector<std::uint64_t> h;
  {
    std::size_t p = 0;
    while ( p < counts.size() )
    {
      while ( p < counts.size() && counts[p] == ' ' )
        ++p;
      if ( p >= counts.size() )
        break;
      auto end = counts.find( ' ', p );
      h.push_back( parse_uint( counts.substr( p, end == std::string_view::npos ? std::string_view::npos : end - p ) ) );
      p = end == std::string_view::npos ? counts.size() : end;
    }
  }
  if ( h.size() < 5 )
    fail( line_, "header needs M I L O A" );
  std::uint64_t M = h[0], I = h[1], L = h[2], O = h[3], A = h[4];
  if ( L != 0 )
    fail( line_, "latches are not supported (L = " + std::to_string( L ) + ")" );
  for ( std::size_t k = 5; k < h.size(); ++k )
    if ( h[k] != 0 )
      fail( line_, "only combinational AIGER is supported" );
  if ( binary && M != I + A )
    fail( line_, "binary AIGER requires M = I + L + A" );
  if ( I + A > M )
    fail( line_, "M is smaller than I + A" );
  max_var_ = M;
  vars_.assign( M + 1, Signal{} );
  and_defs_.assign( M + 1, { UINT64_MAX, UINT64_MAX } );
  state_.assign( M + 1, 0 );

  std::vector<GateId> input_ids;
  for ( std::uint64_t i = 0; i < I; ++i )
  {
    std::uint64_t lit;
    if ( binary )
      lit = 2 * ( i + 1 );
    else
    {
      lit = parse_uints( next_line(), 1 )[0];
      check_literal( lit );
      if ( lit < 2 || ( lit & 1 ) )
        fail( line_, "input literal must be positive and even" );
      if ( state_[lit >> 1] )
        fail( line_, "variable defined twice" );
    }
    GateId id = circuit_.add_input();
    input_ids.push_back( id );
    vars_[lit >> 1] = { id, false };
    state_[lit >> 1] = 2;
  }

  std::vector<std::uint64_t> out_lits;
  for ( std::uint64_t i = 0; i < O; ++i )
  {
    std::uint64_t lit = parse_uints( next_line(), 1 )[0];
    check_literal( lit );
    out_lits.push_back( lit );
  }

  std::vector<std::uint64_t> and_order;
  for ( std::uint64_t i = 0; i < A; ++i )
  {
    std::uint64_t lhs, r0, r1;
    if ( binary )
    {
      lhs = 2 * ( I + i + 1 );
      std::uint64_t d0 = decode_varint();
      std::uint64_t d1 = decode_varint();
      if ( d0 == 0 || d0 > lhs )
        fail( line_, "malformed delta encoding in AND " + std::to_string( i ) );
      r0 = lhs - d0;
      if ( d1 > r0 )
        fail( line_, "malformed delta encoding in AND " + std::to_string( i ) );
      r1 = r0 - d1;
    }
    else
    {
      auto v = parse_uints( next_line(), 3 );
      lhs = v[0];
      r0 = v[1];
      r1 = v[2];
      check_literal( lhs );
      check_literal( r0 );
      check_literal( r1 );
      if ( lhs < 2 || ( lhs & 1 ) )
        fail( line_, "AND literal must be positive and even" );
    }
    std::uint64_t var = lhs >> 1;
    if ( state_[var] || and_defs_[var][0] != UINT64_MAX )
      fail( line_, "variable defined twice" );
    and_defs_[var] = { r0, r1 };
    and_order.push_back( var );
  }
  for ( std::uint64_t var : and_order )
    literal( 2 * var );

  std::vector<std::string> out_names( O );
  while ( pos_ < data_.size() )
  {
    std::string_view line = next_line();
    if ( line.empty() )
      continue;
    if ( line[0] == 'c' )
      break;
    auto space = line.find( ' ' );
    if ( space == std::string_view::npos || space < 2 )
      fail( line_, "malformed symbol line" );
    char kind = line[0];
    std::uint64_t index = parse_uint( line.substr( 1, space - 1 ) );
    std::string name( line.substr( space + 1 ) );
    if ( kind == 'i' && index < I )
      circuit_.set_name( input_ids[index], name );
    else if ( kind == 'o' && index < O )
      out_names[index] = name;
    else
      fail( line_, "symbol index out of range" );
  }

  for ( std::uint64_t i = 0; i < O; ++i )
    circuit_.add_output( literal( out_lits[i] ), out_names[i] );
  return std::move( circuit_ );
}

} // namespace

Circuit read_aiger( std::string_view bytes )
{
  return AigerReader( bytes ).parse();
}

std::string write_aiger_ascii( const Circuit& circuit )
{
  if ( circuit.basis() != Basis::Aig )
    throw CircuitError( "write_aiger_ascii needs an AIG-basis circuit" );
  std::vector<std::uint64_t> lit( circuit.capacity(), 0 );
  std::uint64_t next = 1;
  for ( GateId id : circuit.inputs() )
    lit[id] = 2 * next++;
  std::vector<GateId> ands;
  for ( GateId id : circuit.topological_order() )
  {
    switch ( circuit.kind( id ) )
    {
    case GateKind::Input:
      break;
    case GateKind::Const0:
      lit[id] = 0;
      break;
    case GateKind::Const1:
      lit[id] = 1;
      break;
    case GateKind::And:
      lit[id] = 2 * next++;
      ands.push_back( id );
      break;
    default:
      throw CircuitError( std::string( "gate kind " ) + kind_name( circuit.kind( id ) ) + " cannot be written as AIGER" );
    }
  }
  auto ref = [&]( Signal s ) { return lit[s.id] ^ ( s.negated ? 1 : 0 ); };
  std::ostringstream out;
  out << "aag " << next - 1 << " " << circuit.num_inputs() << " 0 " << circuit.num_outputs() << " " << ands.size()
      << "\n";
  for ( GateId id : circuit.inputs() )
    out << lit[id] << "\n";
  for ( const auto& o : circuit.outputs() )
    out << ref( o ) << "\n";
  for ( GateId id : ands )
  {
    const Gate& g = circuit.gate( id );
    out << lit[id] << " " << ref( g.fanins[0] ) << " " << ref( g.fanins[1] ) << "\n";
  }
  for ( std::size_t i = 0; i < circuit.num_inputs(); ++i )
    if ( auto* n = circuit.name( circuit.inputs()[i] ) )
      out << "i" << i << " " << *n << "\n";
  for ( std::size_t i = 0; i < circuit.num_outputs(); ++i )
    if ( !circuit.output_name( i ).empty() )
      out << "o" << i << " " << circuit.output_name( i ) << "\n";
  return out.str();
}

FileFormat detect_format( const std::string& path, std::string_view contents )
{
  auto ends_with = [&]( const char* ext ) {
    std::string e( ext );
    return path.size() >= e.size() && path.compare( path.size() - e.size(), e.size(), e ) == 0;
  };
  if ( ends_with( ".bench" ) )
    return FileFormat::Bench;
  if ( contents.substr( 0, 4 ) == "aag " )
    return FileFormat::AigerAscii;
  if ( contents.substr( 0, 4 ) == "aig " )
    return FileFormat::AigerBinary;
  if ( ends_with( ".aag" ) )
    return FileFormat::AigerAscii;
  if ( ends_with( ".aig" ) )
    return FileFormat::AigerBinary;
  return FileFormat::Bench;
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( const std::string& path, std::string_view contents )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write '" + path + "'" );
  out.write( contents.data(), static_cast<std::streamsize>( contents.size() ) );
  if ( !out )
    throw std::runtime_error( "write to '" + path + "' failed" );
}

Circuit read_circuit_file( const std::string& path )
{
  std::string data = read_file( path );
  if ( detect_format( path, data ) == FileFormat::Bench )
    return read_bench( data );
  return read_aiger( data );
}

void write_circuit_file( const std::string& path, const Circuit& circuit )
{
  bool bench = path.size() >= 6 && path.compare( path.size() - 6, 6, ".bench" ) == 0;
  Basis target = bench ? Basis::Bench : Basis::Aig;
  if ( circuit.basis() != target )
  {
    Circuit converted = convert_basis( circuit, target );
    write_file( path, bench ? write_bench( converted ) : write_aiger_ascii( converted ) );
    return;
  }
  write_file( path, bench ? write_bench( circuit ) : write_aiger_ascii( circuit ) );
}

} // namespace circsimp
