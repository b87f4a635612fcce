#pragma once

#include "circsimp/builder.hpp"
#include "circsimp/circuit.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace circsimp
{

/* Compact: 5 gates per full adder. Textbook: 7 gates, carry as a sum of products. */
enum class AdderStyle
{
  Compact,
  Textbook
};

enum class MultiplierMethod
{
  Schoolbook,
  Karatsuba
};

struct Graph
{
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const;
};

/* `u v` per line, 0-indexed; blank lines and `#` comments skipped. */
Graph parse_edge_list( const std::string& text );
/* Simple d-regular graph on n vertices. */
Graph random_regular_graph( std::size_t n, std::size_t d, std::uint64_t seed );
/* Erdos-Renyi graph with edge probability p. */
Graph random_graph( std::size_t n, double p, std::uint64_t seed );

/* Building blocks on an existing builder. Numbers are little-endian bit vectors. */
std::vector<Signal> sum_bits( Builder& b, const std::vector<Signal>& xs, AdderStyle style = AdderStyle::Compact );
/* Same value accumulated one input at a time. */
std::vector<Signal> sum_bits_sequential( Builder& b, const std::vector<Signal>& xs );
Signal at_least( Builder& b, const std::vector<Signal>& xs, long k );
Signal at_most( Builder& b, const std::vector<Signal>& xs, long k );
Signal equals_constant( Builder& b, const std::vector<Signal>& bits, std::uint64_t value );
std::vector<Signal> multiply( Builder& b, const std::vector<Signal>& x, const std::vector<Signal>& y,
                              MultiplierMethod method, AdderStyle style = AdderStyle::Textbook );

Circuit gen_sum( std::size_t n, Basis basis = Basis::Bench );
Circuit gen_atleast( std::size_t n, long k, Basis basis = Basis::Bench );
Circuit gen_atmost( std::size_t n, long k, Basis basis = Basis::Bench );
Circuit gen_pigeonhole( std::size_t n, std::size_t m, long k, Basis basis = Basis::Bench );
Circuit gen_even_colouring( const Graph& graph, Basis basis = Basis::Bench );
Circuit gen_clique( const Graph& graph, std::size_t k, Basis basis = Basis::Bench );
Circuit gen_factorization( std::uint64_t k, Basis basis = Basis::Bench );
Circuit gen_multiplier( std::size_t n, MultiplierMethod method, Basis basis = Basis::Bench );

enum class MiterFamily
{
  Summation,
  Threshold,
  Multiplication
};

Circuit gen_miter_family( MiterFamily family, std::size_t n, Basis basis = Basis::Bench );

MiterFamily parse_miter_family( const std::string& name );
MultiplierMethod parse_multiplier_method( const std::string& name );

} // namespace circsimp
