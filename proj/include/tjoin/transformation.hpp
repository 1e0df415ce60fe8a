#pragma once

#include <stdexcept>
#include <vector>

#include "unit.hpp"

namespace tjoin {

/// An ordered sequence of units; applying it concatenates the unit outputs on
/// the same input. Structural equality, with a cached digest.
class Transformation {
 public:
  explicit Transformation(std::vector<Unit> units) : units_(std::move(units)) {
    if (units_.empty()) throw std::invalid_argument("Transformation requires at least one unit");
    Fnv1a h;
    h.u32(static_cast<uint32_t>(units_.size()));
    for (const Unit& u : units_) h.u64(u.hash());
    hash_ = h.state;
  }

  const std::vector<Unit>& units() const { return units_; }
  size_t size() const { return units_.size(); }
  uint64_t hash() const { return hash_; }

  bool operator==(const Transformation& o) const { return hash_ == o.hash_ && units_ == o.units_; }
  bool operator!=(const Transformation& o) const { return !(*this == o); }

 private:
  std::vector<Unit> units_;
  uint64_t hash_ = 0;
};

inline ApplyOutcome apply_transformation(const Transformation& t, const std::u32string& src) {
  std::u32string out;
  for (size_t i = 0; i < t.units().size(); ++i) {
    ApplyOutcome r = apply_unit(t.units()[i], src);
    if (!r.ok()) return ApplyOutcome::failure(r.error, static_cast<int32_t>(i));
    out += r.text;
  }
  return ApplyOutcome::success(std::move(out));
}

inline bool covers(const Transformation& t, const std::u32string& src, const std::u32string& tgt) {
  ApplyOutcome r = apply_transformation(t, src);
  return r.ok() && r.text == tgt;
}

/// Canonical ranking for equal-coverage ties: fewer units first, then units
/// compared pairwise (copying kinds rank before Literal). Total, deterministic.
inline int compare_rank(const Transformation& a, const Transformation& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (int c = compare_units(a.units()[i], b.units()[i])) return c;
  }
  return 0;
}

}  // namespace tjoin
