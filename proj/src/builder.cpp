#include "circsimp/builder.hpp"

namespace circsimp
{

Builder::Builder( Circuit& circuit, bool fold_constants ) : circuit_( circuit ), fold_( fold_constants ) {}

Signal Builder::input( const std::string& name )
{
  return { circuit_.add_input( name ), false };
}

Signal Builder::constant( bool value )
{
  if ( circuit_.basis() == Basis::Aig )
    return circuit_.constant( value );
  return circuit_.constant( false ) ^ value;
}

int Builder::constant_value( Signal s ) const
{
  switch ( circuit_.kind( s.id ) )
  {
  case GateKind::Const0: return s.negated ? 1 : 0;
  case GateKind::Const1: return s.negated ? 0 : 1;
  default: return -1;
  }
}

void Builder::output( Signal s, const std::string& name )
{
  if ( circuit_.basis() == Basis::Bench )
    s = materialize( s );
  circuit_.add_output( s, name );
}

Signal Builder::materialize( Signal s )
{
  if ( circuit_.basis() == Basis::Aig || !s.negated )
    return s;
  GateKind k = circuit_.kind( s.id );
  if ( k == GateKind::Const0 || k == GateKind::Const1 )
    return circuit_.constant( k == GateKind::Const0 );
  if ( fold_ && k == GateKind::Not )
    return circuit_.gate( s.id ).fanins[0];
  if ( auto it = not_cache_.find( s.id ); it != not_cache_.end() && circuit_.alive( it->second ) )
    return { it->second, false };
  GateId id = circuit_.add_gate( GateKind::Not, { Signal{ s.id, false } } );
  not_cache_[s.id] = id;
  return { id, false };
}

Signal Builder::and_( Signal a, Signal b )
{
  if ( fold_ )
  {
    int ca = constant_value( a ), cb = constant_value( b );
    if ( ca == 0 || cb == 0 )
      return constant( false );
    if ( ca == 1 )
      return b;
    if ( cb == 1 )
      return a;
    if ( a == b )
      return a;
    if ( a == !b )
      return constant( false );
  }
  if ( circuit_.basis() == Basis::Aig )
    return { circuit_.add_gate( GateKind::And, { a, b } ), false };
  return binary( GateKind::And, a, b );
}

Signal Builder::or_( Signal a, Signal b )
{
  if ( circuit_.basis() == Basis::Aig )
    return !and_( !a, !b );
  if ( fold_ )
  {
    int ca = constant_value( a ), cb = constant_value( b );
    if ( ca == 1 || cb == 1 )
      return constant( true );
    if ( ca == 0 )
      return b;
    if ( cb == 0 )
      return a;
    if ( a == b )
      return a;
    if ( a == !b )
      return constant( true );
  }
  return binary( GateKind::Or, a, b );
}

Signal Builder::xor_( Signal a, Signal b )
{
  if ( fold_ )
  {
    int ca = constant_value( a ), cb = constant_value( b );
    if ( ca >= 0 )
      return b ^ ( ca == 1 );
    if ( cb >= 0 )
      return a ^ ( cb == 1 );
    if ( a == b )
      return constant( false );
    if ( a == !b )
      return constant( true );
  }
  if ( circuit_.basis() == Basis::Aig )
  {
    Signal both = and_( a, b );
    Signal neither = and_( !a, !b );
    return and_( !both, !neither );
  }
  bool odd = a.negated != b.negated;
  return binary( odd ? GateKind::Nxor : GateKind::Xor, { a.id, false }, { b.id, false } );
}

bool Builder::folds( Signal a, Signal b ) const
{
  return fold_ && ( constant_value( a ) >= 0 || constant_value( b ) >= 0 || a.id == b.id );
}

Signal Builder::nand_( Signal a, Signal b )
{
  if ( circuit_.basis() == Basis::Aig || folds( a, b ) )
    return !and_( a, b );
  return binary( GateKind::Nand, a, b );
}

Signal Builder::nor_( Signal a, Signal b )
{
  if ( circuit_.basis() == Basis::Aig || folds( a, b ) )
    return !or_( a, b );
  return binary( GateKind::Nor, a, b );
}

Signal Builder::xnor_( Signal a, Signal b )
{
  if ( circuit_.basis() == Basis::Aig || folds( a, b ) )
    return !xor_( a, b );
  return binary( GateKind::Nxor, a, b );
}

Signal Builder::gate( GateKind kind, Signal a, Signal b )
{
  switch ( kind )
  {
  case GateKind::And: return and_( a, b );
  case GateKind::Or: return or_( a, b );
  case GateKind::Xor: return xor_( a, b );
  case GateKind::Nand: return nand_( a, b );
  case GateKind::Nor: return nor_( a, b );
  case GateKind::Nxor: return xnor_( a, b );
  case GateKind::Not: return not_( a );
  default: throw CircuitError( "Builder::gate needs a logic kind" );
  }
}

Signal Builder::binary( GateKind kind, Signal a, Signal b )
{
  a = materialize( a );
  b = materialize( b );
  return { circuit_.add_gate( kind, { a, b } ), false };
}

std::vector<Signal> append_circuit( Builder& builder, const Circuit& source, std::span<const Signal> inputs )
{
  if ( inputs.size() != source.num_inputs() )
    throw CircuitError( "append_circuit: input count mismatch" );
  std::vector<Signal> map( source.capacity() );
  for ( std::size_t i = 0; i < inputs.size(); ++i )
    map[source.inputs()[i]] = inputs[i];
  auto ref = [&]( Signal s ) { return map[s.id] ^ s.negated; };
  for ( GateId id : source.topological_order() )
  {
    const Gate& g = source.gate( id );
    switch ( g.kind )
    {
    case GateKind::Input: break;
    case GateKind::Const0: map[id] = builder.constant( false ); break;
    case GateKind::Const1: map[id] = builder.constant( true ); break;
    case GateKind::Not: map[id] = !ref( g.fanins[0] ); break;
    default: map[id] = builder.gate( g.kind, ref( g.fanins[0] ), ref( g.fanins[1] ) ); break;
    }
  }
  std::vector<Signal> outs;
  for ( Signal o : source.outputs() )
    outs.push_back( ref( o ) );
  return outs;
}

Circuit convert_basis( const Circuit& source, Basis target )
{
  Circuit out( target );
  Builder builder( out, false );
  std::vector<Signal> inputs;
  for ( GateId x : source.inputs() )
  {
    const std::string* name = source.name( x );
    inputs.push_back( builder.input( name ? *name : std::string{} ) );
  }
  auto outs = append_circuit( builder, source, inputs );
  for ( std::size_t i = 0; i < outs.size(); ++i )
    builder.output( outs[i], source.output_name( i ) );
  return out;
}

} // namespace circsimp
