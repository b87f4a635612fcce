#include "circsimp/fundb.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <zlib.h>

namespace circsimp
{

namespace
{

constexpr std::array<std::array<std::uint8_t, 3>, 6> kPerms = {
    { { 0, 1, 2 }, { 0, 2, 1 }, { 1, 0, 2 }, { 1, 2, 0 }, { 2, 0, 1 }, { 2, 1, 0 } } };

std::uint8_t full( bool b )
{
  return b ? 0xff : 0x00;
}

/* All 48 substitutions, identity first. BENCH uses the first 6. */
const std::vector<InputMap>& all_maps()
{
  static const std::vector<InputMap> maps = [] {
    std::vector<InputMap> v;
    for ( std::uint8_t neg = 0; neg < 8; ++neg )
      for ( const auto& p : kPerms )
        v.push_back( { p, neg } );
    return v;
  }();
  return maps;
}

std::size_t group_inputs( Basis basis )
{
  return basis == Basis::Aig ? 48 : 6;
}

/* table_maps()[i][t] = apply_input_map(all_maps()[i], t). */
const std::vector<std::array<std::uint8_t, 256>>& table_maps()
{
  static const std::vector<std::array<std::uint8_t, 256>> tables = [] {
    std::vector<std::array<std::uint8_t, 256>> v;
    for ( const auto& m : all_maps() )
    {
      std::array<std::uint8_t, 256> row{};
      for ( unsigned t = 0; t < 256; ++t )
        row[t] = apply_input_map( m, static_cast<std::uint8_t>( t ) );
      v.push_back( row );
    }
    return v;
  }();
  return tables;
}

std::uint32_t pack( const TruthTriple& t )
{
  return std::uint32_t( t[0] ) | ( std::uint32_t( t[1] ) << 8 ) | ( std::uint32_t( t[2] ) << 16 );
}

TruthTriple sorted( TruthTriple t )
{
  std::sort( t.begin(), t.end() );
  return t;
}

bool distinct( const TruthTriple& t )
{
  return t[0] != t[1] && t[0] != t[2] && t[1] != t[2];
}

std::uint8_t normalize( std::uint8_t t )
{
  return ( t & 1 ) ? static_cast<std::uint8_t>( ~t ) : t;
}

} // namespace

InputMap inverse( const InputMap& m )
{
  InputMap inv;
  for ( std::uint8_t k = 0; k < 3; ++k )
    inv.perm[m.perm[k]] = k;
  inv.neg = 0;
  for ( std::uint8_t j = 0; j < 3; ++j )
    if ( m.neg >> inv.perm[j] & 1 )
      inv.neg |= 1 << j;
  return inv;
}

std::uint8_t apply_input_map( const InputMap& m, std::uint8_t table )
{
  std::uint8_t out = 0;
  for ( unsigned x = 0; x < 8; ++x )
  {
    unsigned y = 0;
    for ( unsigned k = 0; k < 3; ++k )
      y |= ( ( ( x >> m.perm[k] ) ^ ( m.neg >> k ) ) & 1 ) << k;
    if ( table >> y & 1 )
      out |= 1 << x;
  }
  return out;
}

TruthTriple apply_transform( const ClassTransform& g, const TruthTriple& key )
{
  TruthTriple q;
  for ( int i = 0; i < 3; ++i )
    q[i] = apply_input_map( g.inputs, key[g.output_perm[i]] ) ^ full( g.output_neg >> i & 1 );
  return q;
}

namespace
{

CanonicalForm canonical_form( const TruthTriple& q, Basis basis, bool output_negation )
{
  const auto& maps = all_maps();
  const auto& tmaps = table_maps();
  bool aig = basis == Basis::Aig;
  CanonicalForm best;
  int best_score = 4;
  bool have = false;
  for ( std::size_t h = 0; h < group_inputs( basis ); ++h )
  {
    TruthTriple base = { tmaps[h][q[0]], tmaps[h][q[1]], tmaps[h][q[2]] };
    for ( std::uint8_t n = 0; n < ( output_negation ? 8 : 1 ); ++n )
    {
      TruthTriple c = { static_cast<std::uint8_t>( base[0] ^ full( n & 1 ) ),
                        static_cast<std::uint8_t>( base[1] ^ full( n >> 1 & 1 ) ),
                        static_cast<std::uint8_t>( base[2] ^ full( n >> 2 & 1 ) ) };
      int score = aig ? ( c[0] & 1 ) + ( c[1] & 1 ) + ( c[2] & 1 ) : 0;
      TruthTriple key = sorted( c );
      if ( have && ( score > best_score || ( score == best_score && key >= best.key ) ) )
        continue;
      have = true;
      best_score = score;
      best.key = key;
      best.transform.inputs = inverse( maps[h] );
      best.transform.output_neg = n;
      std::array<bool, 3> used{};
      for ( int i = 0; i < 3; ++i )
        for ( std::uint8_t j = 0; j < 3; ++j )
          if ( !used[j] && key[j] == c[i] )
          {
            used[j] = true;
            best.transform.output_perm[i] = j;
            break;
          }
    }
  }
  return best;
}

/* Database entries are keyed up to the transforms that cost no gates. In
   BENCH a negated output shared with other gates needs a NOT, so output
   polarity is part of the stored key there. */
CanonicalForm storage_form( const TruthTriple& q, Basis basis )
{
  return canonical_form( q, basis, basis == Basis::Aig );
}

} // namespace

CanonicalForm canonicalize( const TruthTriple& q, Basis basis )
{
  return canonical_form( q, basis, true );
}

std::size_t orbit_size( const TruthTriple& key, Basis basis )
{
  const auto& tmaps = table_maps();
  std::vector<std::uint32_t> seen;
  for ( std::size_t h = 0; h < group_inputs( basis ); ++h )
    for ( std::uint8_t n = 0; n < 8; ++n )
    {
      TruthTriple c;
      for ( int i = 0; i < 3; ++i )
        c[i] = tmaps[h][key[i]] ^ full( n >> i & 1 );
      if ( distinct( c ) )
        seen.push_back( pack( sorted( c ) ) );
    }
  std::sort( seen.begin(), seen.end() );
  return static_cast<std::size_t>( std::unique( seen.begin(), seen.end() ) - seen.begin() );
}

TruthTriple Chain::evaluate() const
{
  std::vector<std::uint8_t> v = { 0x00, kProjections[0], kProjections[1], kProjections[2] };
  auto val = [&]( ChainRef r ) { return static_cast<std::uint8_t>( v.at( r.signal ) ^ full( r.negated ) ); };
  for ( const auto& g : gates )
    v.push_back( static_cast<std::uint8_t>( eval_kind( g.kind, val( g.a ), g.kind == GateKind::Not ? 0 : val( g.b ) ) ) );
  return { val( outputs[0] ), val( outputs[1] ), val( outputs[2] ) };
}

Chain rewire( const Chain& chain, const InputMap& psi, const std::array<std::uint8_t, 3>& output_source,
              std::uint8_t output_neg )
{
  auto map = [&]( ChainRef r ) -> ChainRef {
    if ( r.signal >= 1 && r.signal <= 3 )
    {
      unsigned k = r.signal - 1u;
      return { static_cast<std::uint8_t>( psi.perm[k] + 1 ), r.negated != bool( psi.neg >> k & 1 ) };
    }
    return r;
  };
  Chain out;
  out.gates.reserve( chain.gates.size() );
  for ( const auto& g : chain.gates )
    out.gates.push_back( { g.kind, map( g.a ), g.kind == GateKind::Not ? g.b : map( g.b ) } );
  for ( int j = 0; j < 3; ++j )
    out.outputs[j] = map( chain.outputs[output_source[j]] ) ^ bool( output_neg >> j & 1 );
  return out;
}

Chain prune( const Chain& chain )
{
  std::size_t n = chain.gates.size();
  std::vector<char> need( n + 4, 0 );
  for ( const auto& o : chain.outputs )
    need[o.signal] = 1;
  for ( std::size_t i = n; i-- > 0; )
  {
    if ( !need[i + 4] )
      continue;
    need[chain.gates[i].a.signal] = 1;
    if ( chain.gates[i].kind != GateKind::Not )
      need[chain.gates[i].b.signal] = 1;
  }
  std::vector<std::uint8_t> remap( n + 4, 0 );
  for ( std::uint8_t s = 0; s < 4; ++s )
    remap[s] = s;
  Chain out;
  auto fix = [&]( ChainRef r ) { return ChainRef{ remap[r.signal], r.negated }; };
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( !need[i + 4] )
      continue;
    const auto& g = chain.gates[i];
    out.gates.push_back( { g.kind, fix( g.a ), g.kind == GateKind::Not ? ChainRef{} : fix( g.b ) } );
    remap[i + 4] = static_cast<std::uint8_t>( out.gates.size() + 3 );
  }
  for ( int j = 0; j < 3; ++j )
    out.outputs[j] = fix( chain.outputs[j] );
  return out;
}

const DbEntry* Database::find( const TruthTriple& key ) const
{
  auto it = entries_.find( pack( key ) );
  return it == entries_.end() ? nullptr : &it->second;
}

void Database::insert( DbEntry entry )
{
  auto k = pack( entry.key );
  auto it = entries_.find( k );
  if ( it == entries_.end() || entry.size < it->second.size )
    entries_[k] = std::move( entry );
}

std::vector<const DbEntry*> Database::sorted_entries() const
{
  std::vector<const DbEntry*> v;
  v.reserve( entries_.size() );
  for ( auto& [k, e] : entries_ )
    v.push_back( &e );
  std::sort( v.begin(), v.end(), []( const DbEntry* a, const DbEntry* b ) { return a->key < b->key; } );
  return v;
}

namespace
{

using Clock = std::chrono::steady_clock;

/* Breadth-first enumeration of gate-table sets, one level per size. */
class DbBuilder
{
public:
  DbBuilder( Basis basis, const BuildOptions& options )
      : basis_( basis ), options_( options ), db_( basis, options.max_size ), seen_( 1u << 24, false ),
        start_( Clock::now() )
  {
  }

  Database run();

private:
  bool out_of_time() const
  {
    if ( options_.time_budget <= 0 )
      return false;
    return std::chrono::duration<double>( Clock::now() - start_ ).count() > options_.time_budget;
  }

  std::vector<std::uint8_t> unpack( std::uint64_t state, int size ) const
  {
    std::vector<std::uint8_t> v( size );
    for ( int i = 0; i < size; ++i )
      v[i] = static_cast<std::uint8_t>( state >> ( 8 * i ) );
    return v;
  }

  std::uint64_t canonical_state( std::vector<std::uint8_t> tables ) const;
  void expand( std::uint64_t state, int size, std::vector<std::uint64_t>& out ) const;
  void scan( std::uint64_t state, int size, std::size_t& found );
  void record( const std::vector<std::uint8_t>& tables, const TruthTriple& raw, int size );
  Chain reconstruct( const std::vector<std::uint8_t>& tables, const TruthTriple& raw ) const;
  void mark_orbit( const TruthTriple& key );

  Basis basis_;
  BuildOptions options_;
  Database db_;
  std::vector<bool> seen_;
  Clock::time_point start_;
};

std::uint64_t DbBuilder::canonical_state( std::vector<std::uint8_t> tables ) const
{
  const auto& tmaps = table_maps();
  bool aig = basis_ == Basis::Aig;
  std::uint64_t best = UINT64_MAX;
  std::vector<std::uint8_t> t( tables.size() );
  for ( std::size_t h = 0; h < group_inputs( basis_ ); ++h )
  {
    for ( std::size_t i = 0; i < tables.size(); ++i )
      t[i] = aig ? normalize( tmaps[h][tables[i]] ) : tmaps[h][tables[i]];
    std::sort( t.begin(), t.end() );
    std::uint64_t packed = 0;
    for ( std::size_t i = 0; i < t.size(); ++i )
      packed |= std::uint64_t( t[i] ) << ( 8 * i );
    best = std::min( best, packed );
  }
  return best;
}

void DbBuilder::expand( std::uint64_t state, int size, std::vector<std::uint64_t>& out ) const
{
  std::vector<std::uint8_t> gates = unpack( state, size );
  std::vector<std::uint8_t> avail( kProjections.begin(), kProjections.end() );
  avail.insert( avail.end(), gates.begin(), gates.end() );
  std::array<bool, 256> present{};
  for ( auto t : avail )
    present[t] = true;
  std::array<bool, 256> made{};
  auto emit = [&]( std::uint8_t t ) {
    if ( basis_ == Basis::Aig )
      t = normalize( t );
    if ( t == 0x00 || t == 0xff || present[t] || made[t] )
      return;
    made[t] = true;
    std::vector<std::uint8_t> next = gates;
    next.push_back( t );
    out.push_back( canonical_state( std::move( next ) ) );
  };
  for ( std::size_t i = 0; i < avail.size(); ++i )
  {
    std::uint8_t a = avail[i];
    if ( basis_ == Basis::Bench )
      emit( static_cast<std::uint8_t>( ~a ) );
    for ( std::size_t j = i + 1; j < avail.size(); ++j )
    {
      std::uint8_t b = avail[j];
      if ( basis_ == Basis::Aig )
      {
        for ( int n = 0; n < 4; ++n )
          emit( static_cast<std::uint8_t>( ( a ^ full( n & 1 ) ) & ( b ^ full( n >> 1 & 1 ) ) ) );
      }
      else
      {
        std::uint8_t x = a & b, o = a | b, e = a ^ b;
        emit( x );
        emit( o );
        emit( e );
        emit( static_cast<std::uint8_t>( ~x ) );
        emit( static_cast<std::uint8_t>( ~o ) );
        emit( static_cast<std::uint8_t>( ~e ) );
      }
    }
  }
}

Chain DbBuilder::reconstruct( const std::vector<std::uint8_t>& tables, const TruthTriple& raw ) const
{
  bool aig = basis_ == Basis::Aig;
  Chain chain;
  std::map<std::uint8_t, ChainRef> avail;
  for ( std::uint8_t k = 0; k < 3; ++k )
    avail[kProjections[k]] = { static_cast<std::uint8_t>( k + 1 ), false };
  std::vector<std::uint8_t> pending = tables;
  static constexpr GateKind kBinary[6] = { GateKind::And, GateKind::Or,  GateKind::Xor,
                                           GateKind::Nand, GateKind::Nor, GateKind::Nxor };
  auto add = [&]( ChainGate g, std::uint8_t value, std::uint8_t target ) {
    chain.gates.push_back( g );
    avail[target] = { static_cast<std::uint8_t>( chain.gates.size() + 3 ), value != target };
  };
  while ( !pending.empty() )
  {
    bool progress = false;
    for ( auto it = pending.begin(); it != pending.end() && !progress; ++it )
    {
      std::uint8_t t = *it;
      for ( auto ia = avail.begin(); ia != avail.end() && !progress; ++ia )
      {
        auto [a, ra] = *ia;
        if ( !aig && static_cast<std::uint8_t>( ~a ) == t )
        {
          add( { GateKind::Not, ra, {} }, t, t );
          progress = true;
          break;
        }
        for ( auto ib = std::next( ia ); ib != avail.end() && !progress; ++ib )
        {
          auto [b, rb] = *ib;
          if ( aig )
          {
            for ( int n = 0; n < 4 && !progress; ++n )
            {
              auto u = static_cast<std::uint8_t>( ( a ^ full( n & 1 ) ) & ( b ^ full( n >> 1 & 1 ) ) );
              if ( u == t || u == static_cast<std::uint8_t>( ~t ) )
              {
                add( { GateKind::And, ra ^ bool( n & 1 ), rb ^ bool( n >> 1 & 1 ) }, u, t );
                progress = true;
              }
            }
          }
          else
          {
            for ( GateKind k : kBinary )
              if ( static_cast<std::uint8_t>( eval_kind( k, a, b ) ) == t )
              {
                add( { k, ra, rb }, t, t );
                progress = true;
                break;
              }
          }
        }
      }
      if ( progress )
        pending.erase( it );
    }
    if ( !progress )
      throw std::logic_error( "database state cannot be rebuilt" );
  }
  for ( int i = 0; i < 3; ++i )
  {
    std::uint8_t t = raw[i];
    if ( t == 0x00 || t == 0xff )
      chain.outputs[i] = { 0, t == 0xff };
    else if ( auto it = avail.find( t ); it != avail.end() )
      chain.outputs[i] = it->second;
    else
      chain.outputs[i] = avail.at( static_cast<std::uint8_t>( ~t ) ) ^ true;
  }
  return prune( chain );
}

void DbBuilder::mark_orbit( const TruthTriple& key )
{
  const auto& tmaps = table_maps();
  std::uint8_t masks = basis_ == Basis::Aig ? 8 : 1;
  for ( std::size_t h = 0; h < group_inputs( basis_ ); ++h )
    for ( std::uint8_t n = 0; n < masks; ++n )
    {
      TruthTriple c;
      for ( int i = 0; i < 3; ++i )
        c[i] = tmaps[h][key[i]] ^ full( n >> i & 1 );
      if ( distinct( c ) )
        seen_[pack( sorted( c ) )] = true;
    }
}

void DbBuilder::record( const std::vector<std::uint8_t>& tables, const TruthTriple& raw, int size )
{
  CanonicalForm cf = storage_form( raw, basis_ );
  mark_orbit( cf.key );
  if ( db_.find( cf.key ) )
    return;
  Chain p = reconstruct( tables, raw );
  std::array<std::uint8_t, 3> src{};
  std::uint8_t neg = 0;
  for ( std::uint8_t i = 0; i < 3; ++i )
  {
    std::uint8_t j = cf.transform.output_perm[i];
    src[j] = i;
    if ( cf.transform.output_neg >> i & 1 )
      neg |= 1 << j;
  }
  Chain q = prune( rewire( p, inverse( cf.transform.inputs ), src, neg ) );
  if ( q.evaluate() != cf.key || static_cast<int>( q.size() ) != size )
    throw std::logic_error( "database entry does not reproduce its key" );
  db_.insert( { cf.key, static_cast<std::uint8_t>( size ), true, std::move( q ) } );
}

void DbBuilder::scan( std::uint64_t state, int size, std::size_t& found )
{
  std::vector<std::uint8_t> gates = unpack( state, size );
  std::vector<std::uint8_t> avail = { 0x00, kProjections[0], kProjections[1], kProjections[2] };
  if ( basis_ == Basis::Bench )
    avail.push_back( 0xff );
  avail.insert( avail.end(), gates.begin(), gates.end() );
  std::sort( avail.begin(), avail.end() );
  avail.erase( std::unique( avail.begin(), avail.end() ), avail.end() );
  std::size_t before = db_.num_classes();
  auto probe = [&]( TruthTriple t ) {
    t = sorted( t );
    if ( !distinct( t ) || seen_[pack( t )] )
      return;
    record( gates, t, size );
  };
  std::size_t n = avail.size();
  for ( std::size_t i = 0; i < n; ++i )
    for ( std::size_t j = i + 1; j < n; ++j )
    {
      for ( std::size_t k = j + 1; k < n; ++k )
        probe( { avail[i], avail[j], avail[k] } );
      if ( basis_ == Basis::Bench )
        continue;
      probe( { avail[i], static_cast<std::uint8_t>( ~avail[i] ), avail[j] } );
      probe( { avail[j], static_cast<std::uint8_t>( ~avail[j] ), avail[i] } );
    }
  found += db_.num_classes() - before;
}

Database DbBuilder::run()
{
  std::vector<std::uint64_t> level = { 0 };
  auto& report = db_.report();
  for ( int s = 0; s <= options_.max_size; ++s )
  {
    LevelReport lr;
    lr.size = s;
    lr.states = level.size();
    bool stopped = false;
    for ( std::size_t i = 0; i < level.size(); ++i )
    {
      if ( ( i & 1023 ) == 0 && out_of_time() )
      {
        stopped = true;
        break;
      }
      scan( level[i], s, lr.classes );
    }
    lr.complete = !stopped;
    report.levels.push_back( lr );
    if ( stopped )
    {
      report.budget_exhausted = true;
      break;
    }
    if ( s == options_.max_size )
      break;

    std::vector<std::uint64_t> next, chunk;
    auto flush = [&] {
      std::sort( chunk.begin(), chunk.end() );
      chunk.erase( std::unique( chunk.begin(), chunk.end() ), chunk.end() );
      std::vector<std::uint64_t> merged;
      merged.reserve( next.size() + chunk.size() );
      std::set_union( next.begin(), next.end(), chunk.begin(), chunk.end(), std::back_inserter( merged ) );
      next.swap( merged );
      chunk.clear();
    };
    for ( std::size_t i = 0; i < level.size(); ++i )
    {
      if ( ( i & 1023 ) == 0 && out_of_time() )
      {
        stopped = true;
        break;
      }
      expand( level[i], s, chunk );
      if ( chunk.size() > ( std::size_t{ 1 } << 24 ) )
        flush();
    }
    if ( stopped )
    {
      report.budget_exhausted = true;
      break;
    }
    flush();
    level.swap( next );
  }
  report.seconds = std::chrono::duration<double>( Clock::now() - start_ ).count();
  return std::move( db_ );
}

} // namespace

Database build_database( Basis basis, const BuildOptions& options )
{
  if ( options.max_size < 0 || options.max_size > 8 )
    throw std::invalid_argument( "database size cap must be between 0 and 8" );
  return DbBuilder( basis, options ).run();
}

std::optional<Fragment> lookup( const Database& db, const TruthTriple& triple )
{
  CanonicalForm cf = storage_form( triple, db.basis() );
  const DbEntry* e = db.find( cf.key );
  if ( !e )
    return std::nullopt;
  Chain chain = rewire( e->chain, cf.transform.inputs, cf.transform.output_perm, cf.transform.output_neg );
  Fragment f;
  f.size = chain.size();
  f.chain = std::move( chain );
  return f;
}

TruthTriple pad_tables( const std::vector<std::uint8_t>& tables )
{
  if ( tables.size() > 3 )
    throw std::invalid_argument( "at most three tables can be padded" );
  std::vector<std::uint8_t> v = tables;
  for ( std::uint8_t p : kProjections )
  {
    if ( v.size() == 3 )
      break;
    if ( std::find( v.begin(), v.end(), p ) == v.end() )
      v.push_back( p );
  }
  return { v[0], v[1], v[2] };
}

namespace
{

class DbFormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

void put_u32( std::string& out, std::uint32_t v )
{
  for ( int i = 0; i < 4; ++i )
    out.push_back( static_cast<char>( v >> ( 8 * i ) & 0xff ) );
}

std::uint8_t encode_ref( ChainRef r )
{
  return static_cast<std::uint8_t>( r.signal | ( r.negated ? 0x80 : 0 ) );
}

ChainRef decode_ref( std::uint8_t b )
{
  return { static_cast<std::uint8_t>( b & 0x7f ), bool( b & 0x80 ) };
}

} // namespace

void save_db( const Database& db, std::ostream& out )
{
  std::string buf = "SIMPDB 1 " + std::string( basis_name( db.basis() ) ) + " " + std::to_string( db.cap() ) + "\n";
  auto entries = db.sorted_entries();
  put_u32( buf, static_cast<std::uint32_t>( entries.size() ) );
  static const char* hex = "0123456789abcdef";
  for ( const DbEntry* e : entries )
  {
    for ( auto t : e->key )
    {
      buf.push_back( hex[t >> 4] );
      buf.push_back( hex[t & 15] );
    }
    buf.push_back( static_cast<char>( e->size ) );
    buf.push_back( static_cast<char>( e->optimal ? 1 : 0 ) );
    for ( const auto& g : e->chain.gates )
    {
      buf.push_back( static_cast<char>( g.kind ) );
      buf.push_back( static_cast<char>( encode_ref( g.a ) ) );
      buf.push_back( static_cast<char>( g.kind == GateKind::Not ? 0 : encode_ref( g.b ) ) );
    }
    for ( const auto& o : e->chain.outputs )
      buf.push_back( static_cast<char>( encode_ref( o ) ) );
  }
  auto crc = crc32( 0L, reinterpret_cast<const Bytef*>( buf.data() ), static_cast<uInt>( buf.size() ) );
  put_u32( buf, static_cast<std::uint32_t>( crc ) );
  out.write( buf.data(), static_cast<std::streamsize>( buf.size() ) );
}

Database load_db( std::istream& in )
{
  std::string data( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
  auto eol = data.find( '\n' );
  if ( eol == std::string::npos )
    throw DbFormatError( "database: missing header" );
  std::istringstream header( data.substr( 0, eol ) );
  std::string magic, basis;
  int version = 0, cap = 0;
  header >> magic >> version >> basis >> cap;
  if ( magic != "SIMPDB" )
    throw DbFormatError( "database: bad magic" );
  if ( version != 1 )
    throw DbFormatError( "database: unsupported version " + std::to_string( version ) );
  if ( data.size() < eol + 1 + 8 )
    throw DbFormatError( "database: truncated" );
  std::size_t body_end = data.size() - 4;
  auto u32 = [&]( std::size_t at ) {
    std::uint32_t v = 0;
    for ( int i = 0; i < 4; ++i )
      v |= std::uint32_t( static_cast<unsigned char>( data[at + i] ) ) << ( 8 * i );
    return v;
  };
  auto crc = crc32( 0L, reinterpret_cast<const Bytef*>( data.data() ), static_cast<uInt>( body_end ) );
  if ( static_cast<std::uint32_t>( crc ) != u32( body_end ) )
    throw DbFormatError( "database: checksum mismatch" );
  Database db( parse_basis( basis ), cap );
  std::size_t pos = eol + 1;
  std::uint32_t count = u32( pos );
  pos += 4;
  auto need = [&]( std::size_t n ) {
    if ( pos + n > body_end )
      throw DbFormatError( "database: truncated record" );
  };
  auto hexval = [&]( char c ) -> int {
    if ( c >= '0' && c <= '9' )
      return c - '0';
    if ( c >= 'a' && c <= 'f' )
      return c - 'a' + 10;
    throw DbFormatError( "database: bad hex digit" );
  };
  for ( std::uint32_t r = 0; r < count; ++r )
  {
    DbEntry e;
    need( 8 );
    for ( int i = 0; i < 3; ++i )
      e.key[i] = static_cast<std::uint8_t>( hexval( data[pos + 2 * i] ) * 16 + hexval( data[pos + 2 * i + 1] ) );
    pos += 6;
    e.size = static_cast<std::uint8_t>( data[pos++] );
    e.optimal = data[pos++] & 1;
    need( 3u * e.size + 3 );
    for ( int g = 0; g < e.size; ++g )
    {
      auto kind = static_cast<std::uint8_t>( data[pos] );
      if ( kind < static_cast<std::uint8_t>( GateKind::Not ) || kind > static_cast<std::uint8_t>( GateKind::Nxor ) )
        throw DbFormatError( "database: bad gate kind" );
      ChainGate cg{ static_cast<GateKind>( kind ), decode_ref( static_cast<std::uint8_t>( data[pos + 1] ) ),
                    decode_ref( static_cast<std::uint8_t>( data[pos + 2] ) ) };
      pos += 3;
      if ( cg.a.signal >= g + 4 || cg.b.signal >= g + 4 )
        throw DbFormatError( "database: forward reference" );
      e.chain.gates.push_back( cg );
    }
    for ( int j = 0; j < 3; ++j )
    {
      e.chain.outputs[j] = decode_ref( static_cast<std::uint8_t>( data[pos++] ) );
      if ( e.chain.outputs[j].signal >= e.size + 4 )
        throw DbFormatError( "database: bad output reference" );
      if ( db.basis() == Basis::Bench && e.chain.outputs[j].negated && e.chain.outputs[j].signal != 0 )
        throw DbFormatError( "database: negated BENCH output" );
    }
    db.insert( std::move( e ) );
  }
  if ( pos != body_end )
    throw DbFormatError( "database: trailing bytes" );
  return db;
}

void save_db_file( const Database& db, const std::string& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write '" + path + "'" );
  save_db( db, out );
}

Database load_db_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open database '" + path + "'" );
  return load_db( in );
}

std::map<int, SizeStats> db_stats( const Database& db )
{
  struct ClassInfo
  {
    int size;
    bool optimal;
  };
  std::map<TruthTriple, ClassInfo> classes;
  for ( const DbEntry* e : db.sorted_entries() )
  {
    TruthTriple key = canonicalize( e->key, db.basis() ).key;
    auto [it, fresh] = classes.try_emplace( key, ClassInfo{ e->size, e->optimal } );
    if ( !fresh && e->size < it->second.size )
      it->second = { e->size, e->optimal };
  }
  std::map<int, SizeStats> stats;
  for ( const auto& [key, info] : classes )
  {
    auto& s = stats[info.size];
    ++s.classes;
    s.functions += orbit_size( key, db.basis() );
    if ( info.optimal )
      ++s.optimal_classes;
  }
  return stats;
}

std::string format_stats( const Database& db )
{
  auto stats = db_stats( db );
  int top = db.cap();
  if ( !stats.empty() )
    top = std::max( top, stats.rbegin()->first );
  std::ostringstream out;
  for ( int s = 0; s <= top; ++s )
  {
    SizeStats st = stats.count( s ) ? stats.at( s ) : SizeStats{};
    out << s << ": " << st.classes << " classes, " << st.functions << " functions\n";
  }
  return out.str();
}

} // namespace circsimp
