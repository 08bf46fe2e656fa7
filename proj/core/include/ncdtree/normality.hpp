#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ncdtree/bytes.hpp"
#include "ncdtree/compressor.hpp"

namespace ncdtree {

/// Additive slack alpha * log2(n) + beta bytes for an (in)equality over inputs of
/// at most n bytes.
struct SlackParams {
  double alpha = 10.0;
  double beta = 64.0;

  double slack(std::uint64_t n) const;
};

enum class Axiom { Idempotency, Monotonicity, Symmetry, Distributivity, Subadditivity };

inline constexpr std::array<Axiom, 5> kAllAxioms = {Axiom::Idempotency, Axiom::Monotonicity, Axiom::Symmetry,
                                                     Axiom::Distributivity, Axiom::Subadditivity};

std::string_view to_string(Axiom axiom);

struct AxiomRecord {
  Axiom axiom = Axiom::Idempotency;
  std::size_t samples = 0;
  double max_violation = 0.0;           // bytes
  double max_relative_violation = 0.0;  // fraction of C of the larger operand
  bool pass = true;
};

struct NormalityReport {
  std::string codec;
  SlackParams slack;
  std::array<AxiomRecord, 5> axioms{};

  const AxiomRecord& record(Axiom a) const { return axioms[static_cast<std::size_t>(a)]; }
  bool all_pass() const;

  /// Human-readable table.
  std::string to_text() const;
  /// `key=value` lines, stable order, for machines and golden files.
  std::string to_key_values() const;
};

/// Checks the normal-compressor (in)equalities over every item, ordered pair
/// and ordered triple of distinct corpus items:
///   idempotency     |C(xx) - C(x)|
///   monotonicity    C(x) - C(xy)
///   symmetry        |C(xy) - C(yx)|
///   distributivity  C(xy) + C(z) - C(xz) - C(yz)
///   subadditivity   C(xy) - C(x) - C(y)
/// One-sided violations are clipped at zero. A sample passes when its
/// violation is within slack(n), n the longest string whose code length is
/// involved. Requires at least three corpus items.
NormalityReport audit_normality(const Compressor& compressor, std::span<const Bytes> corpus,
                                const SlackParams& slack = {}, unsigned workers = 1);

}  // namespace ncdtree
