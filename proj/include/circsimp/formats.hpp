#pragma once

#include "circsimp/circuit.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace circsimp
{

enum class Severity
{
  Warning,
  Error
};

struct ParseDiagnostic
{
  std::size_t line = 0;
  std::string message;
  Severity severity = Severity::Error;
};

class ParseError : public std::runtime_error
{
public:
  explicit ParseError( ParseDiagnostic diag );
  const ParseDiagnostic& diagnostic() const { return diag_; }

private:
  ParseDiagnostic diag_;
};

Circuit read_bench( std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr );
std::string write_bench( const Circuit& circuit );

/* Accepts both `aag` and binary `aig` input. */
Circuit read_aiger( std::string_view bytes );
std::string write_aiger_ascii( const Circuit& circuit );

enum class FileFormat
{
  Bench,
  AigerAscii,
  AigerBinary
};

/* Decides by extension first, then by content. */
FileFormat detect_format( const std::string& path, std::string_view contents );

std::string read_file( const std::string& path );
void write_file( const std::string& path, std::string_view contents );

Circuit read_circuit_file( const std::string& path );
/* BENCH for `.bench`, ASCII AIGER otherwise; converts the basis if needed. */
void write_circuit_file( const std::string& path, const Circuit& circuit );

} // namespace circsimp
