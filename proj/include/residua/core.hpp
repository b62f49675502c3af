#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace residua {

/// Failure codes raised by validation and precondition checks.  Checks that
/// scan operation tables always attach the lexicographically first violating
/// tuple, in carrier-index order, as the witness.
enum class errc {
  bad_input,
  not_a_partial_order,
  meet_join_mismatch,
  not_bounded,
  monoid_violation,
  residuum_missing,
  arrow_mismatch,
  precondition_not_divisible,
  equivalence_broken,
  invalid_spec,
  ring_axiom_violation,
  mixed_rings,
  non_commutative_ring,
  precondition_not_multiplication,
  criteria_disagree,
  validation_failed,
  not_bl_algebra,
  size_guard_exceeded,
  method_mismatch,
  catalog_incomplete,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_input: return "BadInput";
    case errc::not_a_partial_order: return "NotAPartialOrder";
    case errc::meet_join_mismatch: return "MeetJoinMismatch";
    case errc::not_bounded: return "NotBounded";
    case errc::monoid_violation: return "MonoidViolation";
    case errc::residuum_missing: return "ResiduumMissing";
    case errc::arrow_mismatch: return "ArrowMismatch";
    case errc::precondition_not_divisible: return "PreconditionNotDivisible";
    case errc::equivalence_broken: return "EquivalenceBroken";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::ring_axiom_violation: return "RingAxiomViolation";
    case errc::mixed_rings: return "MixedRings";
    case errc::non_commutative_ring: return "NonCommutativeRing";
    case errc::precondition_not_multiplication: return "PreconditionNotMultiplication";
    case errc::criteria_disagree: return "CriteriaDisagree";
    case errc::validation_failed: return "ValidationFailed";
    case errc::not_bl_algebra: return "NotBLAlgebra";
    case errc::size_guard_exceeded: return "SizeGuardExceeded";
    case errc::method_mismatch: return "MethodMismatch";
    case errc::catalog_incomplete: return "CatalogIncomplete";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  errc code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::vector<int> witness_;
};

[[noreturn]] inline void fail(errc c, const std::string& what,
                              std::vector<int> witness = {}) {
  throw error(c, what, std::move(witness));
}

inline void expect(bool ok, errc c, const std::string& what,
                   std::vector<int> witness = {}) {
  if (!ok) fail(c, what, std::move(witness));
}

}  // namespace residua
