#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ohg {

enum class ErrorCode {
  empty_edge,
  vertex_out_of_range,
  duplicate_vertex_in_edge,
  unknown_edge,
  unknown_vertex,
  not_adjacent_in_edge,
  invalid_walk,
  disconnected_pair,
  structure_mismatch,
  not_a_partition,
  oracle_budget_exceeded,
  no_convergence,
  empty_spectrum,
  disconnected_input,
  not_uniform,
  dimension_mismatch,
  zero_vector,
  odd_uniformity,
  syntax_error,
  infeasible_parameters,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_edge: return "EmptyEdge";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::duplicate_vertex_in_edge: return "DuplicateVertexInEdge";
    case ErrorCode::unknown_edge: return "UnknownEdge";
    case ErrorCode::unknown_vertex: return "UnknownVertex";
    case ErrorCode::not_adjacent_in_edge: return "NotAdjacentInEdge";
    case ErrorCode::invalid_walk: return "InvalidWalk";
    case ErrorCode::disconnected_pair: return "DisconnectedPair";
    case ErrorCode::structure_mismatch: return "StructureMismatch";
    case ErrorCode::not_a_partition: return "NotAPartition";
    case ErrorCode::oracle_budget_exceeded: return "OracleBudgetExceeded";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::empty_spectrum: return "EmptySpectrum";
    case ErrorCode::disconnected_input: return "DisconnectedInput";
    case ErrorCode::not_uniform: return "NotUniform";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::odd_uniformity: return "OddUniformity";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::infeasible_parameters: return "InfeasibleParameters";
  }
  return "Unknown";
}

/// Every failure raised by the library. `edge()` names the offending edge
/// index for validation errors; `line()` is set by the text parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> edge = std::nullopt,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message),
        edge_(edge),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the error-code prefix.
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> edge() const noexcept { return edge_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> edge_;
  std::optional<std::size_t> line_;
};

}  // namespace ohg
