#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "sgspec/cubic.hpp"
#include "sgspec/rational.hpp"

namespace sgspec {

/// A root of an integer cubic, kept symbolically. index 0 is the largest
/// real root; approx is its double value.
struct CubicRoot {
  CubicCoeffs coeffs;
  int index = 0;
  double approx = 0.0;
};

using EigenValue = std::variant<RatScalar, CubicRoot>;

struct SpectrumEntry {
  EigenValue value;
  int multiplicity = 1;

  double numeric() const;
  bool is_exact() const { return std::holds_alternative<RatScalar>(value); }
};

/// Eigenvalues with multiplicities in canonical form: sorted descending,
/// coinciding values merged.
class Spectrum {
 public:
  static constexpr double kDefaultMergeTol = 1e-9;

  Spectrum() = default;
  /// Canonicalizes: exact values merge when equal; a cubic root merges
  /// with any value within merge_tol and yields to an exact one.
  static Spectrum canonical(std::vector<SpectrumEntry> entries, double merge_tol = kDefaultMergeTol);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  /// Sum of multiplicities.
  std::size_t dimension() const;
  /// Each value repeated by its multiplicity, descending.
  std::vector<double> expanded() const;
  /// Multiplicity of an exact value (0 if absent).
  int multiplicity_of(const RatScalar& v) const;

 private:
  std::vector<SpectrumEntry> entries_;
};

}  // namespace sgspec
