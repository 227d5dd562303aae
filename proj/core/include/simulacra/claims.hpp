#ifndef SIMULACRA_CLAIMS_HPP
#define SIMULACRA_CLAIMS_HPP

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simulacra {

/// Stable names for the reproducible computational claims.
enum class ClaimId {
  Table1,
  Table2,
  H2Consistency,
  LorentzNoSimulacra,
  RealPsd,
  ComplexPsd,
  ComplexPsd3None,
  QuaternionPsd,
  OctonionPsd,
  DoubleComplex,
  Thm4Region,
  Table3,
  LmLn,
  LnLnExhaustive,
  LnLnAppendixB,
  LnLnFormula,
  BoundaryCounterexamples,
};

std::span<const ClaimId> all_claims();
std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

/// One checked instance. `ok` is true iff the actual outcome matches the
/// expectation and every witness re-validates.
struct Record {
  std::string input;
  std::string expected;
  std::string actual;
  std::optional<std::string> witness;
  bool ok = false;
};

struct Report {
  ClaimId claim{};
  bool pass = false;
  std::vector<Record> records;
  std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
  /// Search threads; 0 uses all hardware threads.
  unsigned threads = 0;
};

Report verify_claim(ClaimId id, const VerifyOptions& options = {});

/// A regenerated table plus whether it agrees with the shipped fixture.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool matches_fixture = false;
};

/// which is one of "1", "2", "3", "B". Throws std::invalid_argument otherwise.
Table make_table(std::string_view which, const VerifyOptions& options = {});

}  // namespace simulacra

#endif  // SIMULACRA_CLAIMS_HPP
