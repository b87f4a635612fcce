#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace circsimp
{

using GateId = std::uint32_t;
inline constexpr GateId kNoGate = UINT32_MAX;

enum class Basis : std::uint8_t
{
  Aig,
  Bench
};

enum class GateKind : std::uint8_t
{
  Input,
  Const0,
  Const1,
  Not,
  And,
  Or,
  Xor,
  Nand,
  Nor,
  Nxor
};

int arity( GateKind kind );
bool is_commutative( GateKind kind );
bool is_logic( GateKind kind );
const char* kind_name( GateKind kind );

const char* basis_name( Basis basis );
Basis parse_basis( const std::string& text );

/* Evaluates a gate on 64 assignments at once. */
std::uint64_t eval_kind( GateKind kind, std::uint64_t a, std::uint64_t b );

struct Signal
{
  GateId id = kNoGate;
  bool negated = false;

  Signal operator!() const { return { id, !negated }; }
  Signal operator^( bool neg ) const { return { id, negated != neg }; }
  bool operator==( const Signal& ) const = default;
  auto operator<=>( const Signal& ) const = default;
};

struct Gate
{
  GateKind kind = GateKind::Input;
  std::array<Signal, 2> fanins{};
  bool alive = false;

  int num_fanins() const { return arity( kind ); }
};

class CircuitError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class Circuit
{
public:
  explicit Circuit( Basis basis = Basis::Bench );

  Basis basis() const { return basis_; }

  GateId add_input( const std::string& name = {} );
  GateId add_gate( GateKind kind, std::span<const Signal> operands );
  GateId add_gate( GateKind kind, std::initializer_list<Signal> operands );

  /* Existing constant gate for the value, created on demand. AIG circuits
     only hold CONST0 and express 1 as its negation. */
  Signal constant( bool value );

  void add_output( Signal s, const std::string& name = {} );
  void set_output( std::size_t index, Signal s );

  const std::vector<GateId>& inputs() const { return inputs_; }
  const std::vector<Signal>& outputs() const { return outputs_; }
  const std::string& output_name( std::size_t index ) const { return output_names_[index]; }
  void set_output_name( std::size_t index, const std::string& name ) { output_names_[index] = name; }
  std::size_t num_inputs() const { return inputs_.size(); }
  std::size_t num_outputs() const { return outputs_.size(); }

  /* Logic gates only: inputs and constants are free. */
  std::size_t size() const { return size_; }
  std::size_t num_alive() const { return alive_count_; }
  /* One past the largest id ever handed out. */
  GateId capacity() const { return static_cast<GateId>( gates_.size() ); }

  bool alive( GateId id ) const { return id < gates_.size() && gates_[id].alive; }
  const Gate& gate( GateId id ) const { return gates_[id]; }
  GateKind kind( GateId id ) const { return gates_[id].kind; }
  const std::vector<GateId>& fanouts( GateId id ) const { return fanouts_[id]; }
  std::uint32_t output_refs( GateId id ) const { return output_refs_[id]; }
  bool has_consumers( GateId id ) const { return !fanouts_[id].empty() || output_refs_[id] > 0; }
  std::uint32_t level( GateId id ) const { return levels_[id]; }
  std::uint64_t version( GateId id ) const { return versions_[id]; }

  void set_name( GateId id, const std::string& name );
  const std::string* name( GateId id ) const;
  std::optional<GateId> find( const std::string& name ) const;

  /* Alive gates ordered by (level, id). */
  std::vector<GateId> topological_order() const;

  /* True when target lies in the transitive fanin of from (or equals it). */
  bool depends_on( GateId from, GateId target ) const;

  /* Points every consumer and output of old at the replacement. */
  void replace_fanin( GateId old_id, Signal replacement );
  void replace_fanin( GateId old_id, GateId new_id ) { replace_fanin( old_id, Signal{ new_id, false } ); }

  /* Changes kind and operands of a logic gate in place. */
  void rewrite_gate( GateId id, GateKind kind, std::span<const Signal> operands );

  /* Removes a gate without consumers. Inputs cannot be removed. */
  void remove_gate( GateId id );

  /* Throws CircuitError describing the first violated invariant. */
  void check() const;

private:
  void validate_operands( GateKind kind, std::span<const Signal> operands ) const;
  GateId allocate();
  void attach( GateId id );
  void detach( GateId id );
  void raise_level( GateId id, std::uint32_t minimum );
  void bump( GateId id ) { ++versions_[id]; }

  Basis basis_;
  std::vector<Gate> gates_;
  std::vector<std::vector<GateId>> fanouts_;
  std::vector<std::uint32_t> output_refs_;
  std::vector<std::uint32_t> levels_;
  std::vector<std::uint64_t> versions_;
  std::vector<GateId> free_list_;
  std::vector<GateId> inputs_;
  std::vector<Signal> outputs_;
  std::vector<std::string> output_names_;
  std::unordered_map<GateId, std::string> names_;
  std::unordered_map<std::string, GateId> ids_by_name_;
  GateId const0_ = kNoGate;
  GateId const1_ = kNoGate;
  std::size_t size_ = 0;
  std::size_t alive_count_ = 0;
};

class TruthTable
{
public:
  TruthTable() = default;
  explicit TruthTable( unsigned num_vars );

  unsigned num_vars() const { return num_vars_; }
  std::uint64_t num_bits() const { return std::uint64_t{ 1 } << num_vars_; }
  bool bit( std::uint64_t index ) const { return ( words_[index >> 6] >> ( index & 63 ) ) & 1; }
  void set_bit( std::uint64_t index, bool value );
  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  /* Hex digits, most significant first. */
  std::string to_hex() const;

  bool operator==( const TruthTable& ) const = default;

private:
  unsigned num_vars_ = 0;
  std::vector<std::uint64_t> words_;
};

inline constexpr unsigned kDefaultExhaustiveCap = 20;

/* Bit-parallel evaluation over a fixed topological order. */
class Simulator
{
public:
  explicit Simulator( const Circuit& circuit );

  /* input_words[i] carries 64 values of input i. */
  void run( std::span<const std::uint64_t> input_words );
  std::uint64_t value( Signal s ) const { return s.negated ? ~values_[s.id] : values_[s.id]; }
  std::uint64_t output( std::size_t index ) const { return value( circuit_.outputs()[index] ); }

private:
  const Circuit& circuit_;
  std::vector<GateId> order_;
  std::vector<std::uint64_t> values_;
};

/* Input pattern word w for variable i when enumerating all assignments. */
std::uint64_t exhaustive_pattern( unsigned var, std::uint64_t word );

std::vector<bool> simulate( const Circuit& circuit, const std::vector<bool>& assignment );
std::vector<TruthTable> truth_tables( const Circuit& circuit, unsigned cap = kDefaultExhaustiveCap );
std::vector<GateId> reachable_from_outputs( const Circuit& circuit );

} // namespace circsimp
