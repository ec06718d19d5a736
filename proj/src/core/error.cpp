#include "hypersat/error.hpp"

#include <sstream>

namespace hypersat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LinearityViolation: return "LinearityViolation";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NoPartition: return "NoPartition";
    case ErrorCode::PartitionViolation: return "PartitionViolation";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NotStronglyProper: return "NotStronglyProper";
    case ErrorCode::BudgetInfeasible: return "BudgetInfeasible";
    case ErrorCode::DensityPrecondition: return "DensityPrecondition";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EmptyLevel: return "EmptyLevel";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::WorkCapExceeded: return "WorkCapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> item)
    : std::runtime_error(message), code_(code), item_(item) {}

namespace {

std::string linearity_message(unsigned u, unsigned v, std::size_t existing,
                              std::size_t added) {
  std::ostringstream os;
  os << "edges " << existing << " and " << added << " share the pair (" << u
     << "," << v << ")";
  return os.str();
}

}  // namespace

LinearityViolation::LinearityViolation(unsigned u, unsigned v,
                                       std::size_t existing_edge,
                                       std::size_t new_edge)
    : Error(ErrorCode::LinearityViolation,
            linearity_message(u, v, existing_edge, new_edge), new_edge),
      u_(u),
      v_(v),
      existing_(existing_edge) {}

NotStronglyProper::NotStronglyProper(std::size_t edge_a, std::size_t edge_b,
                                     unsigned shared)
    : Error(ErrorCode::NotStronglyProper,
            "edges " + std::to_string(edge_a) + " and " +
                std::to_string(edge_b) + " meet at vertex " +
                std::to_string(shared) + " but their colours intersect",
            edge_b),
      a_(edge_a),
      b_(edge_b) {}

RetriesExhausted::RetriesExhausted(unsigned vertex, std::size_t part,
                                   std::size_t size, double floor,
                                   std::size_t attempts)
    : Error(ErrorCode::RetriesExhausted,
            "no valid split after " + std::to_string(attempts) +
                " attempts; worst deficit at vertex " + std::to_string(vertex) +
                ", part " + std::to_string(part) + ": " + std::to_string(size) +
                " < " + std::to_string(floor)),
      vertex_(vertex),
      part_(part),
      size_(size),
      floor_(floor) {}

}  // namespace hypersat
