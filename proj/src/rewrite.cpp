#include "circsimp/rewrite.hpp"

#include "circsimp/preprocess.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace circsimp
{

namespace
{

std::uint8_t local_value( const std::unordered_map<GateId, std::uint8_t>& values, const Circuit& circuit, Signal s )
{
  std::uint8_t v = 0;
  if ( auto it = values.find( s.id ); it != values.end() )
    v = it->second;
  else if ( circuit.kind( s.id ) == GateKind::Const1 )
    v = 0xff;
  return s.negated ? static_cast<std::uint8_t>( ~v ) : v;
}

std::unordered_map<GateId, std::uint8_t> local_tables( const Circuit& circuit, const PrincipalSubcircuit& sub )
{
  std::unordered_map<GateId, std::uint8_t> values;
  for ( std::size_t i = 0; i < sub.inputs.size() && i < 3; ++i )
    values[sub.inputs[i]] = kProjections[i];
  for ( GateId id : sub.closure )
  {
    if ( values.count( id ) )
      continue;
    const Gate& g = circuit.gate( id );
    std::uint8_t a = g.num_fanins() > 0 ? local_value( values, circuit, g.fanins[0] ) : 0;
    std::uint8_t b = g.num_fanins() > 1 ? local_value( values, circuit, g.fanins[1] ) : 0;
    values[id] = static_cast<std::uint8_t>( eval_kind( g.kind, a, b ) );
  }
  return values;
}

} // namespace

WindowFunction subcircuit_truth_triple( const Circuit& circuit, const PrincipalSubcircuit& sub )
{
  WindowFunction wf;
  auto values = local_tables( circuit, sub );
  bool aig = circuit.basis() == Basis::Aig;
  for ( GateId o : sub.outputs )
  {
    std::uint8_t t = values.at( o );
    wf.tables.push_back( t );
    OutputSource src;
    if ( t == 0x00 || t == 0xff )
    {
      src.kind = OutputSource::Kind::Constant;
      src.negated = t == 0xff;
      wf.sources.push_back( src );
      continue;
    }
    bool placed = false;
    for ( std::uint8_t i = 0; i < sub.inputs.size() && !placed; ++i )
    {
      bool pos = t == kProjections[i], neg = t == static_cast<std::uint8_t>( ~kProjections[i] );
      if ( pos || neg )
      {
        src = { OutputSource::Kind::Input, i, neg };
        placed = true;
      }
    }
    for ( std::uint8_t j = 0; j < wf.lookup.size() && !placed; ++j )
    {
      if ( wf.lookup[j] == t || ( aig && wf.lookup[j] == static_cast<std::uint8_t>( ~t ) ) )
      {
        src = { OutputSource::Kind::Table, j, wf.lookup[j] != t };
        placed = true;
      }
    }
    if ( !placed )
    {
      src = { OutputSource::Kind::Table, static_cast<std::uint8_t>( wf.lookup.size() ), false };
      wf.lookup.push_back( t );
    }
    wf.sources.push_back( src );
  }
  wf.fits = sub.inputs.size() == 3 && wf.lookup.size() <= 3;
  if ( wf.fits )
    wf.triple = pad_tables( wf.lookup );
  return wf;
}

StrashTable::Key StrashTable::make_key( GateKind kind, Signal a, Signal b )
{
  if ( arity( kind ) < 2 )
    b = Signal{};
  else if ( is_commutative( kind ) && b < a )
    std::swap( a, b );
  return { kind, a, b };
}

std::size_t StrashTable::Hash::operator()( const Key& k ) const
{
  std::uint64_t h = static_cast<std::uint64_t>( k.kind );
  h = h * 0x9e3779b97f4a7c15ull ^ ( std::uint64_t( k.a.id ) << 1 | k.a.negated );
  h = h * 0x9e3779b97f4a7c15ull ^ ( std::uint64_t( k.b.id ) << 1 | k.b.negated );
  return static_cast<std::size_t>( h ^ ( h >> 29 ) );
}

StrashTable::StrashTable( const Circuit& circuit )
{
  for ( GateId id : circuit.topological_order() )
    if ( is_logic( circuit.kind( id ) ) )
      insert( circuit, id );
}

void StrashTable::insert( const Circuit& circuit, GateId id )
{
  const Gate& g = circuit.gate( id );
  table_.emplace( make_key( g.kind, g.fanins[0], g.fanins[1] ), id );
}

GateId StrashTable::find( const Circuit& circuit, GateKind kind, Signal a, Signal b ) const
{
  Key key = make_key( kind, a, b );
  auto it = table_.find( key );
  if ( it == table_.end() || !circuit.alive( it->second ) )
    return kNoGate;
  const Gate& g = circuit.gate( it->second );
  if ( !( make_key( g.kind, g.fanins[0], g.fanins[1] ) == key ) )
    return kNoGate;
  return it->second;
}

namespace
{

/* Maps fragment signals to circuit signals, either counting the gates
   that would be created or creating them. */
class Splicer
{
public:
  Splicer( Circuit& circuit, StrashTable& strash, const std::vector<char>& dying, bool commit )
      : circuit_( circuit ), strash_( strash ), dying_( dying ), commit_( commit )
  {
  }

  std::size_t created() const { return created_; }

  /* Result may be a virtual id (>= capacity) during a dry run. */
  Signal gate( GateKind kind, Signal a, Signal b )
  {
    bool virtual_operand = is_virtual( a ) || ( arity( kind ) == 2 && is_virtual( b ) );
    if ( !virtual_operand )
    {
      GateId hit = strash_.find( circuit_, kind, a, b );
      if ( hit != kNoGate && !dying_[hit] )
        return { hit, false };
    }
    ++created_;
    if ( !commit_ )
      return { circuit_.capacity() + static_cast<GateId>( created_ ), false };
    GateId id = arity( kind ) == 1 ? circuit_.add_gate( kind, { a } ) : circuit_.add_gate( kind, { a, b } );
    strash_.insert( circuit_, id );
    return { id, false };
  }

  Signal constant( bool value )
  {
    if ( commit_ )
      return circuit_.constant( value );
    return { kNoGate - 1, value };
  }

private:
  bool is_virtual( Signal s ) const { return s.id >= circuit_.capacity(); }

  Circuit& circuit_;
  StrashTable& strash_;
  const std::vector<char>& dying_;
  bool commit_;
  std::size_t created_ = 0;
};

/* Replacement signal for every window output. */
std::vector<Signal> splice( Splicer& sp, const Circuit& circuit, const PrincipalSubcircuit& sub,
                            const WindowFunction& wf, const Chain& chain )
{
  std::vector<Signal> sig = { sp.constant( false ) };
  for ( GateId x : sub.inputs )
    sig.push_back( { x, false } );
  auto ref = [&]( ChainRef r ) -> Signal {
    if ( r.signal == 0 )
      return sp.constant( r.negated );
    return sig[r.signal] ^ r.negated;
  };
  for ( const auto& g : chain.gates )
    sig.push_back( sp.gate( g.kind, ref( g.a ), g.kind == GateKind::Not ? Signal{} : ref( g.b ) ) );

  std::vector<Signal> result;
  for ( const auto& src : wf.sources )
  {
    Signal s;
    switch ( src.kind )
    {
    case OutputSource::Kind::Constant:
      s = sp.constant( src.negated );
      break;
    case OutputSource::Kind::Input:
      s = { sub.inputs[src.index], false };
      if ( src.negated )
        s = circuit.basis() == Basis::Aig ? !s : sp.gate( GateKind::Not, s, {} );
      break;
    case OutputSource::Kind::Table:
      s = ref( chain.outputs[src.index] ) ^ src.negated;
      break;
    }
    result.push_back( s );
  }
  return result;
}

} // namespace

bool try_replace( Circuit& circuit, const PrincipalSubcircuit& sub, const Database& db, const RewriteConfig& config,
                  StrashTable& strash, ReplacementRecord* record )
{
  if ( sub.inputs.size() != 3 || sub.outputs.empty() )
    return false;
  WindowFunction wf = subcircuit_truth_triple( circuit, sub );
  if ( !wf.fits )
    return false;
  for ( GateId x : sub.inputs )
    for ( GateId o : sub.outputs )
      if ( circuit.depends_on( x, o ) )
        return false;
  auto fragment = lookup( db, wf.triple );
  if ( !fragment )
    return false;

  std::vector<char> dying( circuit.capacity(), 0 );
  std::vector<GateId> dying_ids;
  std::size_t k = 0;
  for ( GateId id : sub.closure )
  {
    if ( std::binary_search( sub.inputs.begin(), sub.inputs.end(), id ) )
      continue;
    dying[id] = 1;
    dying_ids.push_back( id );
    if ( is_logic( circuit.kind( id ) ) )
      ++k;
  }

  Splicer dry( circuit, strash, dying, false );
  splice( dry, circuit, sub, wf, fragment->chain );
  std::size_t added = dry.created();
  if ( config.strict ? added >= k : added > k )
    return false;

  std::size_t before = circuit.size();
  Splicer real( circuit, strash, dying, true );
  std::vector<Signal> replacement = splice( real, circuit, sub, wf, fragment->chain );
  for ( std::size_t i = 0; i < sub.outputs.size(); ++i )
    if ( replacement[i] != Signal{ sub.outputs[i], false } )
      circuit.replace_fanin( sub.outputs[i], replacement[i] );
  remove_dead_from( circuit, dying_ids );
  if ( record )
  {
    record->generator = sub.generator.gates;
    record->added = real.created();
    record->removed = before + real.created() - circuit.size();
  }
  return true;
}

std::size_t merge_equivalent_in_window( Circuit& circuit, const PrincipalSubcircuit& sub )
{
  auto values = local_tables( circuit, sub );
  bool aig = circuit.basis() == Basis::Aig;
  std::vector<GateId> order = sub.closure;
  std::sort( order.begin(), order.end(), [&]( GateId a, GateId b ) {
    return std::pair( circuit.level( a ), a ) < std::pair( circuit.level( b ), b );
  } );
  std::unordered_map<std::uint8_t, GateId> first;
  std::vector<GateId> removed;
  std::size_t merged = 0;
  for ( GateId id : order )
  {
    if ( !circuit.alive( id ) )
      continue;
    std::uint8_t t = values.at( id );
    bool is_input = std::binary_search( sub.inputs.begin(), sub.inputs.end(), id );
    auto hit = first.find( t );
    bool negated = false;
    if ( hit == first.end() && aig )
    {
      hit = first.find( static_cast<std::uint8_t>( ~t ) );
      negated = hit != first.end();
    }
    if ( hit == first.end() || is_input )
    {
      first.emplace( t, id );
      continue;
    }
    GateId survivor = hit->second;
    if ( circuit.depends_on( survivor, id ) )
      continue;
    circuit.replace_fanin( id, Signal{ survivor, negated } );
    removed.push_back( id );
    ++merged;
  }
  remove_dead_from( circuit, removed );
  return merged;
}

RewriteReport simplify( Circuit& circuit, const RewriteConfig& config )
{
  if ( config.iterations < 1 )
    throw std::invalid_argument( "iterations must be at least 1" );
  if ( !config.database )
    throw std::invalid_argument( "simplify needs a database" );
  if ( config.database->basis() != circuit.basis() )
    throw std::invalid_argument( std::string( "database basis " ) + basis_name( config.database->basis() ) +
                                 " does not match circuit basis " + basis_name( circuit.basis() ) );
  auto start = std::chrono::steady_clock::now();
  RewriteReport report;
  report.initial_size = circuit.size();
  for ( int it = 1; it <= config.iterations; ++it )
  {
    IterationStats st;
    std::size_t before = circuit.size();
    st.preprocessed = preprocess( circuit ).total();
    auto subs = principal_subcircuits( circuit, 3, config.enumeration );
    st.enumerated = subs.size();
    StrashTable strash( circuit );
    for ( auto& sub : subs )
    {
      if ( is_stale( circuit, sub ) )
      {
        ++st.skipped;
        continue;
      }
      ++st.examined;
      PrincipalSubcircuit window = std::move( sub );
      if ( window.outputs.size() > 3 )
      {
        std::size_t m = merge_equivalent_in_window( circuit, window );
        st.merged += m;
        if ( m )
          window = make_subcircuit( circuit, window.generator );
        if ( window.outputs.size() > 3 )
          continue;
      }
      ReplacementRecord rec;
      rec.iteration = it;
      if ( try_replace( circuit, window, *config.database, config, strash, &rec ) )
      {
        ++st.replaced;
        if ( config.log_replacements )
          report.log.push_back( std::move( rec ) );
      }
    }
    remove_dangling( circuit );
    st.size_after = circuit.size();
    st.saved = before - st.size_after;
    report.iterations.push_back( st );
    if ( st.preprocessed + st.replaced + st.merged == 0 )
      break;
  }
  report.final_size = circuit.size();
  report.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return report;
}

std::string format_report( const RewriteReport& report )
{
  std::ostringstream out;
  for ( std::size_t i = 0; i < report.iterations.size(); ++i )
  {
    const auto& s = report.iterations[i];
    out << "iteration " << i + 1 << ": enumerated " << s.enumerated << ", examined " << s.examined << ", skipped "
        << s.skipped << ", replaced " << s.replaced << ", saved " << s.saved << "\n";
  }
  out << "size " << report.initial_size << " -> " << report.final_size << "\n";
  return out.str();
}

} // namespace circsimp
