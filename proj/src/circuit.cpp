#include "circsimp/circuit.hpp"

#include <algorithm>
#include <cstdio>

namespace circsimp
{

int arity( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::Input:
  case GateKind::Const0:
  case GateKind::Const1:
    return 0;
  case GateKind::Not:
    return 1;
  default:
    return 2;
  }
}

bool is_commutative( GateKind kind )
{
  return arity( kind ) == 2;
}

bool is_logic( GateKind kind )
{
  return arity( kind ) > 0;
}

const char* kind_name( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::Input: return "INPUT";
  case GateKind::Const0: return "CONST0";
  case GateKind::Const1: return "CONST1";
  case GateKind::Not: return "NOT";
  case GateKind::And: return "AND";
  case GateKind::Or: return "OR";
  case GateKind::Xor: return "XOR";
  case GateKind::Nand: return "NAND";
  case GateKind::Nor: return "NOR";
  case GateKind::Nxor: return "XNOR";
  }
  return "?";
}

const char* basis_name( Basis basis )
{
  return basis == Basis::Aig ? "aig" : "bench";
}

Basis parse_basis( const std::string& text )
{
  if ( text == "aig" || text == "AIG" )
    return Basis::Aig;
  if ( text == "bench" || text == "BENCH" )
    return Basis::Bench;
  throw CircuitError( "unknown basis '" + text + "'" );
}

std::uint64_t eval_kind( GateKind kind, std::uint64_t a, std::uint64_t b )
{
  switch ( kind )
  {
  case GateKind::Input: return a;
  case GateKind::Const0: return 0;
  case GateKind::Const1: return ~std::uint64_t{ 0 };
  case GateKind::Not: return ~a;
  case GateKind::And: return a & b;
  case GateKind::Or: return a | b;
  case GateKind::Xor: return a ^ b;
  case GateKind::Nand: return ~( a & b );
  case GateKind::Nor: return ~( a | b );
  case GateKind::Nxor: return ~( a ^ b );
  }
  return 0;
}

Circuit::Circuit( Basis basis ) : basis_( basis ) {}

GateId Circuit::allocate()
{
  GateId id;
  if ( !free_list_.empty() )
  {
    id = free_list_.back();
    free_list_.pop_back();
    fanouts_[id].clear();
    output_refs_[id] = 0;
    levels_[id] = 0;
  }
  else
  {
    id = static_cast<GateId>( gates_.size() );
    gates_.emplace_back();
    fanouts_.emplace_back();
    output_refs_.push_back( 0 );
    levels_.push_back( 0 );
    versions_.push_back( 0 );
  }
  bump( id );
  ++alive_count_;
  return id;
}

GateId Circuit::add_input( const std::string& name )
{
  GateId id = allocate();
  gates_[id] = Gate{ GateKind::Input, {}, true };
  inputs_.push_back( id );
  if ( !name.empty() )
    set_name( id, name );
  return id;
}

void Circuit::validate_operands( GateKind kind, std::span<const Signal> operands ) const
{
  if ( kind == GateKind::Input )
    throw CircuitError( "inputs are created with add_input" );
  if ( static_cast<int>( operands.size() ) != arity( kind ) )
    throw CircuitError( std::string( "arity mismatch for " ) + kind_name( kind ) );
  if ( basis_ == Basis::Aig && is_logic( kind ) && kind != GateKind::And )
    throw CircuitError( std::string( "gate kind " ) + kind_name( kind ) + " is not allowed in AIG mode" );
  for ( const auto& op : operands )
  {
    if ( !alive( op.id ) )
      throw CircuitError( "dangling operand id " + std::to_string( op.id ) );
    if ( op.negated && basis_ == Basis::Bench )
      throw CircuitError( "negated operand in BENCH mode" );
  }
}

GateId Circuit::add_gate( GateKind kind, std::initializer_list<Signal> operands )
{
  return add_gate( kind, std::span<const Signal>( operands.begin(), operands.size() ) );
}

GateId Circuit::add_gate( GateKind kind, std::span<const Signal> operands )
{
  validate_operands( kind, operands );
  GateId id = allocate();
  Gate& g = gates_[id];
  g.kind = kind;
  g.alive = true;
  g.fanins = {};
  for ( std::size_t i = 0; i < operands.size(); ++i )
    g.fanins[i] = operands[i];
  if ( is_logic( kind ) )
    ++size_;
  attach( id );
  if ( kind == GateKind::Const0 && const0_ == kNoGate )
    const0_ = id;
  if ( kind == GateKind::Const1 && const1_ == kNoGate )
    const1_ = id;
  return id;
}

Signal Circuit::constant( bool value )
{
  if ( basis_ == Basis::Aig )
  {
    if ( const0_ == kNoGate || !alive( const0_ ) || gates_[const0_].kind != GateKind::Const0 )
    {
      const0_ = kNoGate;
      add_gate( GateKind::Const0, {} );
    }
    return { const0_, value };
  }
  GateId& slot = value ? const1_ : const0_;
  GateKind want = value ? GateKind::Const1 : GateKind::Const0;
  if ( slot == kNoGate || !alive( slot ) || gates_[slot].kind != want )
  {
    slot = kNoGate;
    add_gate( want, {} );
  }
  return { slot, false };
}

void Circuit::attach( GateId id )
{
  const Gate& g = gates_[id];
  std::uint32_t lvl = 0;
  for ( int i = 0; i < g.num_fanins(); ++i )
  {
    GateId f = g.fanins[i].id;
    fanouts_[f].push_back( id );
    bump( f );
    lvl = std::max( lvl, levels_[f] + 1 );
  }
  raise_level( id, lvl );
}

void Circuit::detach( GateId id )
{
  const Gate& g = gates_[id];
  for ( int i = 0; i < g.num_fanins(); ++i )
  {
    GateId f = g.fanins[i].id;
    auto& fo = fanouts_[f];
    auto it = std::find( fo.begin(), fo.end(), id );
    if ( it != fo.end() )
      fo.erase( it );
    bump( f );
  }
}

void Circuit::raise_level( GateId id, std::uint32_t minimum )
{
  if ( levels_[id] >= minimum )
    return;
  levels_[id] = minimum;
  std::vector<GateId> stack{ id };
  while ( !stack.empty() )
  {
    GateId g = stack.back();
    stack.pop_back();
    for ( GateId c : fanouts_[g] )
    {
      if ( levels_[c] <= levels_[g] )
      {
        levels_[c] = levels_[g] + 1;
        stack.push_back( c );
      }
    }
  }
}

void Circuit::add_output( Signal s, const std::string& name )
{
  if ( !alive( s.id ) )
    throw CircuitError( "output refers to a missing gate" );
  if ( s.negated && basis_ == Basis::Bench )
    throw CircuitError( "negated output in BENCH mode" );
  outputs_.push_back( s );
  output_names_.push_back( name );
  ++output_refs_[s.id];
  bump( s.id );
}

void Circuit::set_output( std::size_t index, Signal s )
{
  if ( !alive( s.id ) )
    throw CircuitError( "output refers to a missing gate" );
  if ( s.negated && basis_ == Basis::Bench )
    throw CircuitError( "negated output in BENCH mode" );
  Signal& slot = outputs_.at( index );
  --output_refs_[slot.id];
  bump( slot.id );
  slot = s;
  ++output_refs_[s.id];
  bump( s.id );
}

void Circuit::set_name( GateId id, const std::string& name )
{
  if ( auto it = names_.find( id ); it != names_.end() )
    ids_by_name_.erase( it->second );
  if ( name.empty() )
  {
    names_.erase( id );
    return;
  }
  if ( auto it = ids_by_name_.find( name ); it != ids_by_name_.end() && it->second != id )
    names_.erase( it->second );
  names_[id] = name;
  ids_by_name_[name] = id;
}

const std::string* Circuit::name( GateId id ) const
{
  auto it = names_.find( id );
  return it == names_.end() ? nullptr : &it->second;
}

std::optional<GateId> Circuit::find( const std::string& name ) const
{
  auto it = ids_by_name_.find( name );
  if ( it == ids_by_name_.end() )
    return std::nullopt;
  return it->second;
}

std::vector<GateId> Circuit::topological_order() const
{
  std::vector<GateId> order;
  order.reserve( alive_count_ );
  for ( GateId id = 0; id < gates_.size(); ++id )
    if ( gates_[id].alive )
      order.push_back( id );
  std::sort( order.begin(), order.end(), [this]( GateId a, GateId b ) {
    return levels_[a] != levels_[b] ? levels_[a] < levels_[b] : a < b;
  } );
  return order;
}

bool Circuit::depends_on( GateId from, GateId target ) const
{
  if ( from == target )
    return true;
  if ( levels_[from] <= levels_[target] )
    return false;
  std::vector<char> seen( gates_.size(), 0 );
  std::vector<GateId> stack{ from };
  seen[from] = 1;
  while ( !stack.empty() )
  {
    GateId g = stack.back();
    stack.pop_back();
    const Gate& gate = gates_[g];
    for ( int i = 0; i < gate.num_fanins(); ++i )
    {
      GateId f = gate.fanins[i].id;
      if ( f == target )
        return true;
      if ( seen[f] || levels_[f] <= levels_[target] )
        continue;
      seen[f] = 1;
      stack.push_back( f );
    }
  }
  return false;
}

void Circuit::replace_fanin( GateId old_id, Signal replacement )
{
  if ( !alive( old_id ) || !alive( replacement.id ) )
    throw CircuitError( "replace_fanin on a missing gate" );
  if ( replacement.id == old_id && !replacement.negated )
    return;
  if ( replacement.negated && basis_ == Basis::Bench )
    throw CircuitError( "negated replacement in BENCH mode" );
  if ( replacement.id == old_id || depends_on( replacement.id, old_id ) )
    throw CircuitError( "replacement would create a cycle" );

  std::vector<GateId> consumers = fanouts_[old_id];
  std::sort( consumers.begin(), consumers.end() );
  consumers.erase( std::unique( consumers.begin(), consumers.end() ), consumers.end() );
  for ( GateId c : consumers )
  {
    Gate& g = gates_[c];
    for ( int i = 0; i < g.num_fanins(); ++i )
    {
      if ( g.fanins[i].id == old_id )
      {
        g.fanins[i] = { replacement.id, g.fanins[i].negated != replacement.negated };
        fanouts_[replacement.id].push_back( c );
      }
    }
    bump( c );
    raise_level( c, levels_[replacement.id] + 1 );
  }
  fanouts_[old_id].clear();
  for ( auto& out : outputs_ )
  {
    if ( out.id == old_id )
    {
      out = { replacement.id, out.negated != replacement.negated };
      --output_refs_[old_id];
      ++output_refs_[replacement.id];
    }
  }
  bump( old_id );
  bump( replacement.id );
}

void Circuit::rewrite_gate( GateId id, GateKind kind, std::span<const Signal> operands )
{
  if ( !alive( id ) || !is_logic( gates_[id].kind ) )
    throw CircuitError( "rewrite_gate needs a live logic gate" );
  validate_operands( kind, operands );
  if ( !is_logic( kind ) )
    throw CircuitError( "rewrite_gate cannot produce a source gate" );
  for ( const auto& op : operands )
    if ( depends_on( op.id, id ) )
      throw CircuitError( "rewrite would create a cycle" );
  detach( id );
  Gate& g = gates_[id];
  g.kind = kind;
  g.fanins = {};
  for ( std::size_t i = 0; i < operands.size(); ++i )
    g.fanins[i] = operands[i];
  bump( id );
  attach( id );
}

void Circuit::remove_gate( GateId id )
{
  if ( !alive( id ) )
    throw CircuitError( "remove_gate on a missing gate" );
  if ( gates_[id].kind == GateKind::Input )
    throw CircuitError( "inputs cannot be removed" );
  if ( has_consumers( id ) )
    throw CircuitError( "remove_gate on a gate that is still referenced" );
  detach( id );
  if ( is_logic( gates_[id].kind ) )
    --size_;
  if ( id == const0_ )
    const0_ = kNoGate;
  if ( id == const1_ )
    const1_ = kNoGate;
  gates_[id].alive = false;
  if ( auto it = names_.find( id ); it != names_.end() )
  {
    ids_by_name_.erase( it->second );
    names_.erase( it );
  }
  bump( id );
  --alive_count_;
  free_list_.push_back( id );
}

void Circuit::check() const
{
  std::vector<std::uint32_t> refs( gates_.size(), 0 );
  std::size_t logic = 0;
  for ( GateId id = 0; id < gates_.size(); ++id )
  {
    const Gate& g = gates_[id];
    if ( !g.alive )
      continue;
    if ( is_logic( g.kind ) )
      ++logic;
    if ( basis_ == Basis::Aig && is_logic( g.kind ) && g.kind != GateKind::And )
      throw CircuitError( "non-AND logic gate " + std::to_string( id ) + " in AIG mode" );
    for ( int i = 0; i < g.num_fanins(); ++i )
    {
      const Signal& f = g.fanins[i];
      if ( !alive( f.id ) )
        throw CircuitError( "gate " + std::to_string( id ) + " has a dangling operand" );
      if ( f.negated && basis_ == Basis::Bench )
        throw CircuitError( "negated edge in BENCH mode at gate " + std::to_string( id ) );
      if ( levels_[f.id] >= levels_[id] )
        throw CircuitError( "topological order violated at gate " + std::to_string( id ) );
      ++refs[f.id];
    }
  }
  for ( GateId id = 0; id < gates_.size(); ++id )
    if ( gates_[id].alive && refs[id] != fanouts_[id].size() )
      throw CircuitError( "fanout list out of sync at gate " + std::to_string( id ) );
  if ( logic != size_ )
    throw CircuitError( "size counter out of sync" );
  for ( GateId in : inputs_ )
    if ( !alive( in ) || gates_[in].kind != GateKind::Input )
      throw CircuitError( "input list refers to a non-input" );
  std::size_t declared = 0;
  for ( GateId id = 0; id < gates_.size(); ++id )
    if ( gates_[id].alive && gates_[id].kind == GateKind::Input )
      ++declared;
  if ( declared != inputs_.size() )
    throw CircuitError( "input gate missing from the input list" );
  for ( const auto& out : outputs_ )
  {
    if ( !alive( out.id ) )
      throw CircuitError( "output refers to a missing gate" );
    if ( out.negated && basis_ == Basis::Bench )
      throw CircuitError( "negated output in BENCH mode" );
  }
}

TruthTable::TruthTable( unsigned num_vars )
    : num_vars_( num_vars ), words_( num_vars <= 6 ? 1 : ( std::size_t{ 1 } << ( num_vars - 6 ) ), 0 )
{
}

void TruthTable::set_bit( std::uint64_t index, bool value )
{
  std::uint64_t mask = std::uint64_t{ 1 } << ( index & 63 );
  if ( value )
    words_[index >> 6] |= mask;
  else
    words_[index >> 6] &= ~mask;
}

std::string TruthTable::to_hex() const
{
  std::uint64_t digits = num_vars_ <= 2 ? 1 : ( std::uint64_t{ 1 } << ( num_vars_ - 2 ) );
  std::string out;
  out.reserve( digits );
  for ( std::uint64_t d = digits; d-- > 0; )
  {
    std::uint64_t nibble = ( words_[( d * 4 ) >> 6] >> ( ( d * 4 ) & 63 ) ) & 0xf;
    if ( num_vars_ < 2 )
      nibble &= ( 1u << ( 1u << num_vars_ ) ) - 1;
    out.push_back( "0123456789abcdef"[nibble] );
  }
  return out;
}

Simulator::Simulator( const Circuit& circuit )
    : circuit_( circuit ), order_( circuit.topological_order() ), values_( circuit.capacity(), 0 )
{
}

void Simulator::run( std::span<const std::uint64_t> input_words )
{
  const auto& inputs = circuit_.inputs();
  if ( input_words.size() != inputs.size() )
    throw CircuitError( "input word count mismatch" );
  for ( std::size_t i = 0; i < inputs.size(); ++i )
    values_[inputs[i]] = input_words[i];
  for ( GateId id : order_ )
  {
    const Gate& g = circuit_.gate( id );
    switch ( g.kind )
    {
    case GateKind::Input:
      break;
    case GateKind::Const0:
    case GateKind::Const1:
      values_[id] = eval_kind( g.kind, 0, 0 );
      break;
    case GateKind::Not:
      values_[id] = ~value( g.fanins[0] );
      break;
    default:
      values_[id] = eval_kind( g.kind, value( g.fanins[0] ), value( g.fanins[1] ) );
    }
  }
}

std::uint64_t exhaustive_pattern( unsigned var, std::uint64_t word )
{
  static constexpr std::uint64_t kMasks[6] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
                                               0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
  if ( var < 6 )
    return kMasks[var];
  return ( ( word >> ( var - 6 ) ) & 1 ) ? ~std::uint64_t{ 0 } : 0;
}

std::vector<bool> simulate( const Circuit& circuit, const std::vector<bool>& assignment )
{
  if ( assignment.size() != circuit.num_inputs() )
    throw CircuitError( "assignment length does not match the input count" );
  std::vector<std::uint64_t> words( assignment.size() );
  for ( std::size_t i = 0; i < assignment.size(); ++i )
    words[i] = assignment[i] ? 1 : 0;
  Simulator sim( circuit );
  sim.run( words );
  std::vector<bool> result( circuit.num_outputs() );
  for ( std::size_t i = 0; i < result.size(); ++i )
    result[i] = sim.output( i ) & 1;
  return result;
}

std::vector<TruthTable> truth_tables( const Circuit& circuit, unsigned cap )
{
  auto n = static_cast<unsigned>( circuit.num_inputs() );
  if ( n > cap )
    throw CircuitError( "too many inputs for exhaustive simulation (" + std::to_string( n ) + " > " +
                        std::to_string( cap ) + ")" );
  std::vector<TruthTable> tables( circuit.num_outputs(), TruthTable( n ) );
  std::uint64_t num_words = n <= 6 ? 1 : ( std::uint64_t{ 1 } << ( n - 6 ) );
  std::uint64_t tail_mask = n >= 6 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( 1u << n ) ) - 1 );
  Simulator sim( circuit );
  std::vector<std::uint64_t> in( n );
  for ( std::uint64_t w = 0; w < num_words; ++w )
  {
    for ( unsigned i = 0; i < n; ++i )
      in[i] = exhaustive_pattern( i, w );
    sim.run( in );
    for ( std::size_t o = 0; o < tables.size(); ++o )
      tables[o].words()[w] = sim.output( o ) & tail_mask;
  }
  return tables;
}

std::vector<GateId> reachable_from_outputs( const Circuit& circuit )
{
  std::vector<char> seen( circuit.capacity(), 0 );
  std::vector<GateId> stack;
  for ( const auto& out : circuit.outputs() )
  {
    if ( !seen[out.id] )
    {
      seen[out.id] = 1;
      stack.push_back( out.id );
    }
  }
  while ( !stack.empty() )
  {
    GateId g = stack.back();
    stack.pop_back();
    const Gate& gate = circuit.gate( g );
    for ( int i = 0; i < gate.num_fanins(); ++i )
    {
      GateId f = gate.fanins[i].id;
      if ( !seen[f] )
      {
        seen[f] = 1;
        stack.push_back( f );
      }
    }
  }
  std::vector<GateId> result;
  for ( GateId id = 0; id < circuit.capacity(); ++id )
    if ( seen[id] )
      result.push_back( id );
  return result;
}

} // namespace circsimp
