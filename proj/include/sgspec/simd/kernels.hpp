#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Data-parallel double kernels behind the Jacobi eigensolver. Every ISA
// variant has a scalar reference in kernels_scalar.cpp; dispatch picks the
// widest variant the running CPU supports unless overridden.

namespace sgspec::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
/// Parses "scalar", "avx2", "neon"; throws InvalidParams otherwise.
Isa parse_isa(std::string_view name);

struct KernelTable {
  Isa isa;
  /// x <- c x - s y,  y <- s x + c y  (plane rotation of two rows).
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  /// sum_i x_i * y_i.
  double (*dot)(const double* x, const double* y, std::size_t n);
};

bool isa_compiled(Isa isa);
bool isa_supported(Isa isa);
/// All variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

const KernelTable& kernels_for(Isa isa);
/// The currently selected table: the override if set, else the best
/// supported ISA.
const KernelTable& active_kernels();
/// Throws InvalidParams if the ISA is not usable here.
void set_active_isa(Isa isa);
void reset_active_isa();

namespace scalar {
void rotate(double* x, double* y, std::size_t n, double c, double s);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
void rotate(double* x, double* y, std::size_t n, double c, double s);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace avx2

namespace neon {
void rotate(double* x, double* y, std::size_t n, double c, double s);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace neon

}  // namespace sgspec::simd
