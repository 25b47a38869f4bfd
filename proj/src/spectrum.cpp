#include "sgspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace sgspec {

double SpectrumEntry::numeric() const {
  if (const auto* r = std::get_if<RatScalar>(&value)) return r->to_double();
  return std::get<CubicRoot>(value).approx;
}

Spectrum Spectrum::canonical(std::vector<SpectrumEntry> entries, double merge_tol) {
  std::erase_if(entries, [](const SpectrumEntry& e) { return e.multiplicity <= 0; });
  std::stable_sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.numeric() > b.numeric();
  });
  Spectrum out;
  for (auto& e : entries) {
    if (!out.entries_.empty()) {
      SpectrumEntry& last = out.entries_.back();
      bool same = false;
      if (last.is_exact() && e.is_exact()) {
        same = std::get<RatScalar>(last.value) == std::get<RatScalar>(e.value);
      } else {
        same = std::fabs(last.numeric() - e.numeric()) <= merge_tol;
      }
      if (same) {
        if (!last.is_exact() && e.is_exact()) last.value = e.value;
        last.multiplicity += e.multiplicity;
        continue;
      }
    }
    out.entries_.push_back(std::move(e));
  }
  return out;
}

std::size_t Spectrum::dimension() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += static_cast<std::size_t>(e.multiplicity);
  return total;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(dimension());
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.numeric());
  return out;
}

int Spectrum::multiplicity_of(const RatScalar& v) const {
  for (const auto& e : entries_) {
    if (const auto* r = std::get_if<RatScalar>(&e.value); r != nullptr && *r == v) return e.multiplicity;
  }
  return 0;
}

}  // namespace sgspec
