#include "circsimp/benchgen.hpp"

#include "circsimp/equiv.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace circsimp
{

std::vector<std::size_t> Graph::degrees() const
{
  std::vector<std::size_t> d( vertices, 0 );
  for ( auto [u, v] : edges )
  {
    ++d[u];
    ++d[v];
  }
  return d;
}

Graph parse_edge_list( const std::string& text )
{
  Graph g;
  std::istringstream in( text );
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( auto hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    std::istringstream ls( line );
    long long u, v;
    if ( !( ls >> u ) )
      continue;
    std::string rest;
    if ( !( ls >> v ) || ( ls >> rest ) || u < 0 || v < 0 )
      throw std::invalid_argument( "edge list line " + std::to_string( lineno ) + ": expected two vertex numbers" );
    if ( u == v )
      throw std::invalid_argument( "edge list line " + std::to_string( lineno ) + ": self-loop" );
    g.edges.emplace_back( static_cast<std::size_t>( u ), static_cast<std::size_t>( v ) );
    g.vertices = std::max<std::size_t>( g.vertices, static_cast<std::size_t>( std::max( u, v ) ) + 1 );
  }
  return g;
}

Graph random_regular_graph( std::size_t n, std::size_t d, std::uint64_t seed )
{
  if ( d >= n || ( n * d ) % 2 )
    throw std::invalid_argument( "no simple " + std::to_string( d ) + "-regular graph on " + std::to_string( n ) +
                                 " vertices" );
  std::mt19937_64 rng( seed );
  for ( int attempt = 0; attempt < 10000; ++attempt )
  {
    std::vector<std::size_t> points;
    for ( std::size_t v = 0; v < n; ++v )
      points.insert( points.end(), d, v );
    std::shuffle( points.begin(), points.end(), rng );
    std::set<std::pair<std::size_t, std::size_t>> seen;
    Graph g;
    g.vertices = n;
    bool ok = true;
    for ( std::size_t i = 0; i + 1 < points.size() && ok; i += 2 )
    {
      auto e = std::minmax( points[i], points[i + 1] );
      ok = e.first != e.second && seen.insert( e ).second;
      g.edges.push_back( e );
    }
    if ( ok )
      return g;
  }
  throw std::runtime_error( "random regular graph: too many rejected pairings" );
}

Graph random_graph( std::size_t n, double p, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::bernoulli_distribution coin( p );
  Graph g;
  g.vertices = n;
  for ( std::size_t u = 0; u < n; ++u )
    for ( std::size_t v = u + 1; v < n; ++v )
      if ( coin( rng ) )
        g.edges.emplace_back( u, v );
  return g;
}

namespace
{

struct Adder
{
  Signal sum, carry;
};

Adder half_adder( Builder& b, Signal x, Signal y )
{
  return { b.xor_( x, y ), b.and_( x, y ) };
}

Adder full_adder( Builder& b, Signal x, Signal y, Signal z, AdderStyle style )
{
  if ( style == AdderStyle::Textbook )
  {
    Signal xy = b.and_( x, y ), xz = b.and_( x, z );
    Signal s = b.xor_( x, b.xor_( y, z ) );
    Signal yz = b.and_( y, z );
    return { s, b.or_( xy, b.or_( xz, yz ) ) };
  }
  Signal t = b.xor_( x, y );
  return { b.xor_( t, z ), b.or_( b.and_( x, y ), b.and_( t, z ) ) };
}

/* Column compression: columns[w] holds bits of weight 2^w. Carries out of
   the top column are dropped. */
std::vector<Signal> compress( Builder& b, std::vector<std::deque<Signal>> columns, AdderStyle style )
{
  std::size_t width = columns.size();
  std::vector<Signal> result;
  for ( std::size_t w = 0; w < width; ++w )
  {
    auto& col = columns[w];
    std::erase_if( col, [&]( Signal s ) { return b.constant_value( s ) == 0; } );
    while ( col.size() >= 2 )
    {
      Adder a;
      if ( col.size() >= 3 )
      {
        Signal x = col[0], y = col[1], z = col[2];
        col.erase( col.begin(), col.begin() + 3 );
        a = full_adder( b, x, y, z, style );
      }
      else
      {
        Signal x = col[0], y = col[1];
        col.clear();
        a = half_adder( b, x, y );
      }
      col.push_back( a.sum );
      if ( w + 1 < width && b.constant_value( a.carry ) != 0 )
        columns[w + 1].push_back( a.carry );
    }
    result.push_back( col.empty() ? b.constant( false ) : col.front() );
  }
  return result;
}

std::size_t bit_width( std::uint64_t n )
{
  std::size_t w = 0;
  while ( n )
  {
    ++w;
    n >>= 1;
  }
  return w;
}

std::vector<Signal> schoolbook( Builder& b, const std::vector<Signal>& x, const std::vector<Signal>& y,
                                AdderStyle style )
{
  std::vector<std::deque<Signal>> columns( x.size() + y.size() );
  for ( std::size_t i = 0; i < x.size(); ++i )
    for ( std::size_t j = 0; j < y.size(); ++j )
      columns[i + j].push_back( b.and_( x[i], y[j] ) );
  return compress( b, std::move( columns ), style );
}

std::vector<Signal> karatsuba( Builder& b, const std::vector<Signal>& x, const std::vector<Signal>& y,
                               AdderStyle style )
{
  std::size_t n = std::max( x.size(), y.size() );
  if ( n < 4 )
    return schoolbook( b, x, y, style );
  std::size_t h = n / 2;
  auto part = [&]( const std::vector<Signal>& v, std::size_t from, std::size_t to ) {
    std::vector<Signal> r;
    for ( std::size_t i = from; i < to; ++i )
      r.push_back( i < v.size() ? v[i] : b.constant( false ) );
    return r;
  };
  auto x0 = part( x, 0, h ), x1 = part( x, h, n ), y0 = part( y, 0, h ), y1 = part( y, h, n );
  std::size_t m = std::max( h, n - h ) + 1;
  auto add = [&]( const std::vector<Signal>& p, const std::vector<Signal>& q ) {
    std::vector<std::deque<Signal>> cols( m );
    for ( std::size_t i = 0; i < p.size(); ++i )
      cols[i].push_back( p[i] );
    for ( std::size_t i = 0; i < q.size(); ++i )
      cols[i].push_back( q[i] );
    return compress( b, std::move( cols ), style );
  };
  auto z0 = karatsuba( b, x0, y0, style );
  auto z2 = karatsuba( b, x1, y1, style );
  auto z1 = karatsuba( b, add( x0, x1 ), add( y0, y1 ), style );

  /* z1 - z0 - z2 as z1 + ~z0 + ~z2 + 2 modulo 2^(2m). */
  std::size_t wm = 2 * m;
  std::vector<std::deque<Signal>> mid( wm );
  for ( std::size_t i = 0; i < wm; ++i )
  {
    mid[i].push_back( i < z1.size() ? z1[i] : b.constant( false ) );
    mid[i].push_back( i < z0.size() ? !z0[i] : b.constant( true ) );
    mid[i].push_back( i < z2.size() ? !z2[i] : b.constant( true ) );
  }
  mid[1].push_back( b.constant( true ) );
  auto cross = compress( b, std::move( mid ), style );

  std::vector<std::deque<Signal>> total( x.size() + y.size() );
  auto place = [&]( const std::vector<Signal>& v, std::size_t shift ) {
    for ( std::size_t i = 0; i < v.size() && i + shift < total.size(); ++i )
      total[i + shift].push_back( v[i] );
  };
  place( z0, 0 );
  place( cross, h );
  place( z2, 2 * h );
  return compress( b, std::move( total ), style );
}

std::vector<Signal> inputs( Builder& b, const std::string& prefix, std::size_t n, std::size_t first = 1 )
{
  std::vector<Signal> v;
  for ( std::size_t i = 0; i < n; ++i )
    v.push_back( b.input( prefix + std::to_string( i + first ) ) );
  return v;
}

void outputs( Builder& b, const std::vector<Signal>& v, const std::string& prefix )
{
  for ( std::size_t i = 0; i < v.size(); ++i )
    b.output( v[i], prefix + std::to_string( i ) );
}

Signal and_all( Builder& b, const std::vector<Signal>& v )
{
  Signal acc = b.constant( true );
  for ( Signal s : v )
    acc = b.and_( acc, s );
  return acc;
}

Signal at_least_two_chain( Builder& b, const std::vector<Signal>& xs )
{
  Signal any = b.constant( false ), two = b.constant( false );
  for ( Signal x : xs )
  {
    two = b.or_( two, b.and_( any, x ) );
    any = b.or_( any, x );
  }
  return two;
}

} // namespace

std::vector<Signal> sum_bits( Builder& b, const std::vector<Signal>& xs, AdderStyle style )
{
  std::size_t width = std::max<std::size_t>( 1, bit_width( xs.size() ) );
  std::vector<std::deque<Signal>> columns( width );
  columns[0].assign( xs.begin(), xs.end() );
  return compress( b, std::move( columns ), style );
}

std::vector<Signal> sum_bits_sequential( Builder& b, const std::vector<Signal>& xs )
{
  std::size_t width = std::max<std::size_t>( 1, bit_width( xs.size() ) );
  std::vector<Signal> acc;
  for ( std::size_t j = 0; j < xs.size(); ++j )
  {
    Signal carry = xs[j];
    for ( auto& bit : acc )
    {
      Adder a = half_adder( b, bit, carry );
      bit = a.sum;
      carry = a.carry;
    }
    if ( bit_width( j + 1 ) > acc.size() )
      acc.push_back( carry );
  }
  while ( acc.size() < width )
    acc.push_back( b.constant( false ) );
  return acc;
}

Signal at_least( Builder& b, const std::vector<Signal>& xs, long k )
{
  if ( k <= 0 )
    return b.constant( true );
  if ( static_cast<std::size_t>( k ) > xs.size() )
    return b.constant( false );
  if ( k == 1 )
  {
    Signal acc = xs[0];
    for ( std::size_t i = 1; i < xs.size(); ++i )
      acc = b.or_( acc, xs[i] );
    return acc;
  }
  auto s = sum_bits( b, xs );
  Signal ge = b.constant( true );
  for ( std::size_t i = 0; i < s.size(); ++i )
    ge = ( static_cast<unsigned long>( k ) >> i & 1 ) ? b.and_( s[i], ge ) : b.or_( s[i], ge );
  return ge;
}

Signal at_most( Builder& b, const std::vector<Signal>& xs, long k )
{
  return !at_least( b, xs, k + 1 );
}

Signal equals_constant( Builder& b, const std::vector<Signal>& bits, std::uint64_t value )
{
  if ( bits.size() < 64 && ( value >> bits.size() ) )
    return b.constant( false );
  Signal acc = b.constant( true );
  for ( std::size_t i = 0; i < bits.size(); ++i )
    acc = b.and_( acc, b.xnor_( bits[i], b.constant( i < 64 && ( value >> i & 1 ) ) ) );
  return acc;
}

std::vector<Signal> multiply( Builder& b, const std::vector<Signal>& x, const std::vector<Signal>& y,
                              MultiplierMethod method, AdderStyle style )
{
  return method == MultiplierMethod::Karatsuba ? karatsuba( b, x, y, style ) : schoolbook( b, x, y, style );
}

Circuit gen_sum( std::size_t n, Basis basis )
{
  if ( n < 1 )
    throw std::invalid_argument( "sum needs n >= 1" );
  Circuit c( basis );
  Builder b( c );
  outputs( b, sum_bits( b, inputs( b, "x", n ) ), "s" );
  return c;
}

Circuit gen_atleast( std::size_t n, long k, Basis basis )
{
  if ( k < 0 || k > static_cast<long>( n ) + 1 )
    throw std::invalid_argument( "threshold k must be within 0..n+1" );
  Circuit c( basis );
  Builder b( c );
  b.output( at_least( b, inputs( b, "x", n ), k ), "out" );
  return c;
}

Circuit gen_atmost( std::size_t n, long k, Basis basis )
{
  if ( k < 0 || k > static_cast<long>( n ) + 1 )
    throw std::invalid_argument( "threshold k must be within 0..n+1" );
  Circuit c( basis );
  Builder b( c );
  b.output( at_most( b, inputs( b, "x", n ), k ), "out" );
  return c;
}

Circuit gen_pigeonhole( std::size_t n, std::size_t m, long k, Basis basis )
{
  if ( n < 1 || m < 1 || k < 1 )
    throw std::invalid_argument( "pigeonhole needs n, m, k >= 1" );
  Circuit c( basis );
  Builder b( c );
  std::vector<std::vector<Signal>> x( n );
  for ( std::size_t i = 0; i < n; ++i )
    for ( std::size_t j = 0; j < m; ++j )
      x[i].push_back( b.input( "x" + std::to_string( i + 1 ) + "_" + std::to_string( j + 1 ) ) );
  std::vector<Signal> terms;
  for ( std::size_t i = 0; i < n; ++i )
    terms.push_back( at_least( b, x[i], 1 ) );
  for ( std::size_t j = 0; j < m; ++j )
  {
    std::vector<Signal> column;
    for ( std::size_t i = 0; i < n; ++i )
      column.push_back( x[i][j] );
    terms.push_back( at_most( b, column, k ) );
  }
  b.output( and_all( b, terms ), "out" );
  return c;
}

Circuit gen_even_colouring( const Graph& graph, Basis basis )
{
  auto deg = graph.degrees();
  for ( std::size_t v = 0; v < deg.size(); ++v )
    if ( deg[v] % 2 )
      throw std::invalid_argument( "even colouring needs even degrees; vertex " + std::to_string( v ) + " has " +
                                   std::to_string( deg[v] ) );
  Circuit c( basis );
  Builder b( c );
  std::vector<Signal> x;
  for ( auto [u, v] : graph.edges )
    x.push_back( b.input( "x" + std::to_string( u ) + "_" + std::to_string( v ) ) );
  std::vector<std::vector<Signal>> incident( graph.vertices );
  for ( std::size_t e = 0; e < graph.edges.size(); ++e )
  {
    incident[graph.edges[e].first].push_back( x[e] );
    incident[graph.edges[e].second].push_back( x[e] );
  }
  std::vector<Signal> terms;
  for ( std::size_t v = 0; v < graph.vertices; ++v )
    if ( !incident[v].empty() )
      terms.push_back( equals_constant( b, sum_bits( b, incident[v] ), deg[v] / 2 ) );
  b.output( and_all( b, terms ), "out" );
  return c;
}

Circuit gen_clique( const Graph& graph, std::size_t k, Basis basis )
{
  if ( k > graph.vertices )
    throw std::invalid_argument( "clique size exceeds vertex count" );
  std::size_t n = graph.vertices;
  std::vector<std::vector<char>> adj( n, std::vector<char>( n, 0 ) );
  for ( auto [u, v] : graph.edges )
    adj[u][v] = adj[v][u] = 1;
  Circuit c( basis );
  Builder b( c );
  auto x = inputs( b, "x", n, 0 );
  std::vector<Signal> terms;
  for ( std::size_t u = 0; u < n; ++u )
    for ( std::size_t v = u + 1; v < n; ++v )
      if ( !adj[u][v] )
        terms.push_back( b.or_( !x[u], !x[v] ) );
  std::vector<Signal> negated;
  for ( Signal s : x )
    negated.push_back( !s );
  terms.push_back( at_most( b, negated, static_cast<long>( n - k ) ) );
  b.output( and_all( b, terms ), "out" );
  return c;
}

Circuit gen_factorization( std::uint64_t k, Basis basis )
{
  if ( k < 2 )
    throw std::invalid_argument( "factorization needs k >= 2" );
  std::size_t w = bit_width( k - 1 );
  Circuit c( basis );
  Builder b( c );
  auto x = inputs( b, "a", w, 0 );
  auto y = inputs( b, "b", w, 0 );
  auto product = multiply( b, x, y, MultiplierMethod::Schoolbook );
  Signal ok = equals_constant( b, product, k );
  ok = b.and_( ok, !equals_constant( b, x, 1 ) );
  ok = b.and_( ok, !equals_constant( b, x, k ) );
  b.output( ok, "out" );
  return c;
}

Circuit gen_multiplier( std::size_t n, MultiplierMethod method, Basis basis )
{
  if ( n < 1 )
    throw std::invalid_argument( "multiplier needs n >= 1" );
  Circuit c( basis );
  Builder b( c );
  auto x = inputs( b, "a", n, 0 );
  auto y = inputs( b, "b", n, 0 );
  outputs( b, multiply( b, x, y, method ), "p" );
  return c;
}

Circuit gen_miter_family( MiterFamily family, std::size_t n, Basis basis )
{
  if ( n < 1 )
    throw std::invalid_argument( "miter family needs n >= 1" );
  Circuit lhs( basis ), rhs( basis );
  Builder bl( lhs ), br( rhs );
  switch ( family )
  {
  case MiterFamily::Summation:
    outputs( bl, sum_bits( bl, inputs( bl, "x", n ) ), "s" );
    outputs( br, sum_bits_sequential( br, inputs( br, "x", n ) ), "s" );
    break;
  case MiterFamily::Threshold:
    bl.output( at_least_two_chain( bl, inputs( bl, "x", n ) ), "out" );
    br.output( at_least( br, inputs( br, "x", n ), 2 ), "out" );
    break;
  case MiterFamily::Multiplication:
  {
    auto xl = inputs( bl, "a", n, 0 ), yl = inputs( bl, "b", n, 0 );
    outputs( bl, multiply( bl, xl, yl, MultiplierMethod::Schoolbook ), "p" );
    auto xr = inputs( br, "a", n, 0 ), yr = inputs( br, "b", n, 0 );
    outputs( br, multiply( br, xr, yr, MultiplierMethod::Karatsuba ), "p" );
    break;
  }
  }
  return miter( lhs, rhs );
}

MiterFamily parse_miter_family( const std::string& name )
{
  if ( name == "summation" || name == "sum" )
    return MiterFamily::Summation;
  if ( name == "threshold" )
    return MiterFamily::Threshold;
  if ( name == "multiplication" || name == "mult" )
    return MiterFamily::Multiplication;
  throw std::invalid_argument( "unknown miter family '" + name + "'" );
}

MultiplierMethod parse_multiplier_method( const std::string& name )
{
  if ( name == "schoolbook" )
    return MultiplierMethod::Schoolbook;
  if ( name == "karatsuba" )
    return MultiplierMethod::Karatsuba;
  throw std::invalid_argument( "unknown multiplication method '" + name + "'" );
}

} // namespace circsimp
