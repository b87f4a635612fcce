#include "circsimp/principal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace circsimp
{

namespace
{

bool is_source( GateKind k )
{
  return !is_logic( k );
}

/* Reusable visit marks so repeated searches avoid clearing. */
struct Marks
{
  std::vector<std::uint32_t> stamp;
  std::uint32_t current = 0;

  void reset( std::size_t n )
  {
    if ( stamp.size() < n )
      stamp.resize( n, 0 );
    if ( ++current == 0 )
    {
      std::fill( stamp.begin(), stamp.end(), 0 );
      current = 1;
    }
  }
  bool test_and_set( GateId id )
  {
    if ( stamp[id] == current )
      return true;
    stamp[id] = current;
    return false;
  }
};

thread_local Marks g_marks;

} // namespace

std::vector<GateId> closure( const Circuit& circuit, std::span<const GateId> generators )
{
  std::vector<char> member( circuit.capacity(), 0 );
  using Entry = std::pair<std::uint32_t, GateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<GateId> result;
  for ( GateId x : generators )
  {
    if ( member[x] )
      continue;
    member[x] = 1;
    result.push_back( x );
  }
  for ( GateId x : result )
    for ( GateId c : circuit.fanouts( x ) )
      queue.emplace( circuit.level( c ), c );
  while ( !queue.empty() )
  {
    GateId c = queue.top().second;
    queue.pop();
    if ( member[c] )
      continue;
    const Gate& g = circuit.gate( c );
    bool all = true;
    for ( int i = 0; i < g.num_fanins(); ++i )
      all = all && member[g.fanins[i].id];
    if ( !all )
      continue;
    member[c] = 1;
    result.push_back( c );
    for ( GateId d : circuit.fanouts( c ) )
      if ( !member[d] )
        queue.emplace( circuit.level( d ), d );
  }
  std::sort( result.begin(), result.end(), [&]( GateId a, GateId b ) {
    return circuit.level( a ) != circuit.level( b ) ? circuit.level( a ) < circuit.level( b ) : a < b;
  } );
  return result;
}

bool in_closure( const Circuit& circuit, GateId v, std::span<const GateId> generators )
{
  auto in_x = [&]( GateId g ) { return std::find( generators.begin(), generators.end(), g ) != generators.end(); };
  if ( in_x( v ) )
    return true;
  if ( generators.empty() || is_source( circuit.kind( v ) ) )
    return false;
  std::uint32_t floor = UINT32_MAX;
  for ( GateId x : generators )
    floor = std::min( floor, circuit.level( x ) );
  if ( circuit.level( v ) <= floor )
    return false;
  // A gate outside X at or below the lowest generator level cannot be cut off by X.
  Marks& marks = g_marks;
  marks.reset( circuit.capacity() );
  std::vector<GateId> stack{ v };
  marks.test_and_set( v );
  while ( !stack.empty() )
  {
    const Gate& g = circuit.gate( stack.back() );
    stack.pop_back();
    for ( int i = 0; i < g.num_fanins(); ++i )
    {
      GateId f = g.fanins[i].id;
      if ( marks.test_and_set( f ) || in_x( f ) )
        continue;
      if ( is_source( circuit.kind( f ) ) || circuit.level( f ) <= floor )
        return false;
      stack.push_back( f );
    }
  }
  return true;
}

std::optional<int> dependency_degree( const Circuit& circuit, GateId v, std::span<const GateId> generators )
{
  if ( !in_closure( circuit, v, generators ) )
    return std::nullopt;
  std::size_t n = generators.size();
  for ( std::size_t size = 1; size <= n; ++size )
  {
    for ( unsigned mask = 1; mask < ( 1u << n ); ++mask )
    {
      if ( static_cast<std::size_t>( __builtin_popcount( mask ) ) != size )
        continue;
      std::vector<GateId> y;
      for ( std::size_t i = 0; i < n; ++i )
        if ( mask & ( 1u << i ) )
          y.push_back( generators[i] );
      if ( in_closure( circuit, v, y ) )
        return static_cast<int>( size );
    }
  }
  return static_cast<int>( n );
}

namespace
{

struct Cut
{
  std::array<GateId, 3> ids{};
  std::uint8_t n = 0;

  bool operator==( const Cut& o ) const { return n == o.n && ids == o.ids; }
  bool operator<( const Cut& o ) const
  {
    if ( n != o.n )
      return n < o.n;
    return std::lexicographical_compare( ids.begin(), ids.begin() + n, o.ids.begin(), o.ids.begin() + o.n );
  }
  std::span<const GateId> span() const { return { ids.data(), n }; }
};

Cut single( GateId v )
{
  Cut c;
  c.ids[0] = v;
  c.n = 1;
  return c;
}

bool merge( const Cut& a, const Cut& b, Cut& out )
{
  std::uint8_t i = 0, j = 0, k = 0;
  while ( i < a.n || j < b.n )
  {
    GateId next;
    if ( j >= b.n || ( i < a.n && a.ids[i] < b.ids[j] ) )
      next = a.ids[i++];
    else if ( i >= a.n || b.ids[j] < a.ids[i] )
      next = b.ids[j++];
    else
    {
      next = a.ids[i++];
      ++j;
    }
    if ( k == 3 )
      return false;
    out.ids[k++] = next;
  }
  out.n = k;
  return true;
}

/* Drops cuts that strictly contain another candidate. */
void dominance_filter( std::vector<Cut>& cuts )
{
  std::sort( cuts.begin(), cuts.end() );
  cuts.erase( std::unique( cuts.begin(), cuts.end() ), cuts.end() );
  std::set<Cut> present( cuts.begin(), cuts.end() );
  std::vector<Cut> kept;
  for ( const Cut& c : cuts )
  {
    bool dominated = false;
    for ( unsigned mask = 1; mask + 1 < ( 1u << c.n ) && !dominated; ++mask )
    {
      Cut sub;
      for ( std::uint8_t i = 0; i < c.n; ++i )
        if ( mask & ( 1u << i ) )
          sub.ids[sub.n++] = c.ids[i];
      dominated = present.count( sub ) > 0;
    }
    if ( !dominated )
      kept.push_back( c );
  }
  cuts.swap( kept );
}

bool minimal_generator( const Circuit& circuit, GateId v, const Cut& c )
{
  if ( !in_closure( circuit, v, c.span() ) )
    return false;
  for ( std::uint8_t skip = 0; skip < c.n && c.n > 1; ++skip )
  {
    std::vector<GateId> y;
    for ( std::uint8_t i = 0; i < c.n; ++i )
      if ( i != skip )
        y.push_back( c.ids[i] );
    if ( in_closure( circuit, v, y ) )
      return false;
  }
  return true;
}

SSets to_ssets( const Circuit& circuit, const std::vector<std::vector<Cut>>& lists, std::vector<char> flagged )
{
  SSets out;
  GateId n = circuit.capacity();
  out.s1.assign( n, {} );
  out.s2.assign( n, {} );
  out.s3.assign( n, {} );
  out.flagged = std::move( flagged );
  out.flagged.resize( n, 0 );
  for ( GateId v = 0; v < n && v < lists.size(); ++v )
  {
    for ( const Cut& c : lists[v] )
    {
      GateSet s( c.ids.begin(), c.ids.begin() + c.n );
      ( c.n == 1 ? out.s1 : c.n == 2 ? out.s2 : out.s3 )[v].push_back( std::move( s ) );
    }
    for ( auto* list : { &out.s1[v], &out.s2[v], &out.s3[v] } )
      std::sort( list->begin(), list->end() );
  }
  return out;
}

} // namespace

SSets s_sets( const Circuit& circuit, const SSetOptions& options )
{
  std::vector<std::vector<Cut>> lists( circuit.capacity() );
  std::vector<char> flagged( circuit.capacity(), 0 );
  for ( GateId v : circuit.topological_order() )
  {
    const Gate& g = circuit.gate( v );
    std::vector<Cut>& list = lists[v];
    if ( is_source( g.kind ) )
    {
      list.push_back( single( v ) );
      continue;
    }
    GateId a = g.fanins[0].id;
    GateId b = g.num_fanins() > 1 ? g.fanins[1].id : a;
    bool inherited = flagged[a] || flagged[b];
    if ( a == b )
      list = lists[a];
    else
    {
      for ( const Cut& ca : lists[a] )
        for ( const Cut& cb : lists[b] )
        {
          Cut u;
          if ( merge( ca, cb, u ) )
            list.push_back( u );
        }
      dominance_filter( list );
      if ( inherited )
        std::erase_if( list, [&]( const Cut& c ) { return !minimal_generator( circuit, v, c ); } );
    }
    list.push_back( single( v ) );
    std::sort( list.begin(), list.end() );
    if ( list.size() > options.candidate_cap )
    {
      list.resize( options.candidate_cap );
      flagged[v] = 1;
    }
    flagged[v] = flagged[v] || inherited;
  }
  return to_ssets( circuit, lists, std::move( flagged ) );
}

SSets brute_force_s_sets( const Circuit& circuit )
{
  GateId n = circuit.capacity();
  if ( n > 64 )
    throw CircuitError( "brute_force_s_sets is limited to 64 gate ids" );
  std::vector<GateId> alive;
  for ( GateId id = 0; id < n; ++id )
    if ( circuit.alive( id ) )
      alive.push_back( id );

  // Plain fixpoint iteration of the definition, independent of levels.
  auto close = [&]( std::uint64_t x ) {
    std::uint64_t set = x;
    for ( bool changed = true; changed; )
    {
      changed = false;
      for ( GateId id : alive )
      {
        if ( set >> id & 1 )
          continue;
        const Gate& g = circuit.gate( id );
        if ( g.num_fanins() == 0 )
          continue;
        bool all = true;
        for ( int i = 0; i < g.num_fanins(); ++i )
          all = all && ( set >> g.fanins[i].id & 1 );
        if ( all )
        {
          set |= std::uint64_t{ 1 } << id;
          changed = true;
        }
      }
    }
    return set;
  };

  std::map<std::uint64_t, std::uint64_t> closures;
  std::vector<std::uint64_t> subsets;
  for ( std::size_t i = 0; i < alive.size(); ++i )
  {
    subsets.push_back( std::uint64_t{ 1 } << alive[i] );
    for ( std::size_t j = i + 1; j < alive.size(); ++j )
    {
      subsets.push_back( ( std::uint64_t{ 1 } << alive[i] ) | ( std::uint64_t{ 1 } << alive[j] ) );
      for ( std::size_t k = j + 1; k < alive.size(); ++k )
        subsets.push_back( ( std::uint64_t{ 1 } << alive[i] ) | ( std::uint64_t{ 1 } << alive[j] ) |
                           ( std::uint64_t{ 1 } << alive[k] ) );
    }
  }
  for ( auto s : subsets )
    closures[s] = close( s );

  std::vector<std::vector<Cut>> lists( n );
  for ( auto x : subsets )
  {
    std::uint64_t gx = closures.at( x );
    for ( GateId v : alive )
    {
      if ( !( gx >> v & 1 ) )
        continue;
      bool minimal = true;
      for ( std::uint64_t y = ( x - 1 ) & x; y && minimal; y = ( y - 1 ) & x )
        minimal = !( closures.at( y ) >> v & 1 );
      if ( !minimal )
        continue;
      Cut c;
      for ( GateId id : alive )
        if ( x >> id & 1 )
          c.ids[c.n++] = id;
      lists[v].push_back( c );
    }
  }
  return to_ssets( circuit, lists, {} );
}

PrincipalSubcircuit make_subcircuit( const Circuit& circuit, GeneratorSet generator )
{
  PrincipalSubcircuit sub;
  sub.generator = std::move( generator );
  sub.inputs = sub.generator.gates;
  sub.closure = closure( circuit, sub.inputs );
  std::vector<char> inner( circuit.capacity(), 0 );
  for ( GateId id : sub.closure )
    inner[id] = 1;
  for ( GateId x : sub.inputs )
    inner[x] = 0;
  for ( GateId id : sub.closure )
  {
    sub.versions.emplace_back( id, circuit.version( id ) );
    if ( !inner[id] )
      continue;
    bool seen = circuit.output_refs( id ) > 0;
    for ( GateId c : circuit.fanouts( id ) )
      seen = seen || !inner[c];
    if ( seen )
      sub.outputs.push_back( id );
  }
  return sub;
}

bool is_stale( const Circuit& circuit, const PrincipalSubcircuit& sub )
{
  for ( auto [id, version] : sub.versions )
    if ( !circuit.alive( id ) || circuit.version( id ) != version )
      return true;
  return false;
}

std::vector<PrincipalSubcircuit> principal_subcircuits( const Circuit& circuit, int k, const SSetOptions& options,
                                                        EnumerationStats* stats )
{
  if ( k != 2 && k != 3 )
    throw CircuitError( "principal subcircuits are defined for k = 2 or 3" );
  SSets sets = s_sets( circuit, options );
  std::size_t limit = k == 2 ? 1 : 2;
  std::map<GateSet, std::size_t> index;
  std::vector<GeneratorSet> chosen;
  EnumerationStats local;

  for ( GateId v : circuit.topological_order() )
  {
    if ( sets.flagged[v] )
      ++local.flagged_gates;
    const auto& sk = sets.of_size( k, v );
    std::size_t m = sk.size();
    if ( m == 0 )
      continue;
    // dom[i][j]: the closure of sk[i] contains sk[j].
    std::vector<std::vector<char>> dom( m, std::vector<char>( m, 0 ) );
    for ( std::size_t i = 0; i < m; ++i )
      for ( std::size_t j = 0; j < m; ++j )
      {
        if ( i == j )
        {
          dom[i][j] = 1;
          continue;
        }
        bool all = true;
        for ( GateId z : sk[j] )
          all = all && in_closure( circuit, z, sk[i] );
        dom[i][j] = all;
      }
    std::vector<std::size_t> maximal;
    for ( std::size_t i = 0; i < m; ++i )
    {
      bool beaten = false;
      for ( std::size_t j = 0; j < m && !beaten; ++j )
      {
        if ( j == i || !dom[j][i] )
          continue;
        // Strictly larger closure, or equal closure with a smaller id list.
        beaten = !dom[i][j] || j < i;
      }
      if ( !beaten )
        maximal.push_back( i );
    }
    if ( maximal.size() > limit )
      ++local.bound_violations;
    for ( std::size_t i : maximal )
    {
      if ( index.count( sk[i] ) )
        continue;
      index.emplace( sk[i], chosen.size() );
      chosen.push_back( { sk[i], v } );
    }
  }

  std::vector<PrincipalSubcircuit> result;
  result.reserve( chosen.size() );
  for ( auto& gen : chosen )
    result.push_back( make_subcircuit( circuit, std::move( gen ) ) );
  if ( stats )
    *stats = local;
  return result;
}

} // namespace circsimp
