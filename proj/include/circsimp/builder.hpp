#pragma once

#include "circsimp/circuit.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace circsimp
{

/* Basis-independent construction helper. Signals may carry a pending
   negation; in BENCH mode it is materialized as a NOT gate on use. */
class Builder
{
public:
  explicit Builder( Circuit& circuit, bool fold_constants = true );

  Circuit& circuit() { return circuit_; }

  Signal input( const std::string& name = {} );
  Signal constant( bool value );
  void output( Signal s, const std::string& name = {} );

  Signal not_( Signal a ) { return !a; }
  Signal and_( Signal a, Signal b );
  Signal or_( Signal a, Signal b );
  Signal xor_( Signal a, Signal b );
  Signal xnor_( Signal a, Signal b );
  Signal nand_( Signal a, Signal b );
  Signal nor_( Signal a, Signal b );
  Signal gate( GateKind kind, Signal a, Signal b );

  /* Plain signal usable as a gate operand in the circuit's basis. */
  Signal materialize( Signal s );

  /* Value of a constant signal, or -1. */
  int constant_value( Signal s ) const;

private:
  Signal binary( GateKind kind, Signal a, Signal b );
  /* True when kind(a, b) needs no gate of its own. */
  bool folds( Signal a, Signal b ) const;

  Circuit& circuit_;
  bool fold_;
  std::unordered_map<GateId, GateId> not_cache_;
};

/* Rebuilds source on the given input signals; returns its output signals. */
std::vector<Signal> append_circuit( Builder& builder, const Circuit& source, std::span<const Signal> inputs );

/* Same functions in the target basis, with input and output names kept. */
Circuit convert_basis( const Circuit& source, Basis target );

} // namespace circsimp
