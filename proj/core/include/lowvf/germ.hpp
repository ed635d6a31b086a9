#pragma once

#include <string>
#include <vector>

#include "lowvf/errors.hpp"
#include "lowvf/poly.hpp"

namespace lowvf {

// One branch f_k = (f_{k,1}, ..., f_{k,p}); every component is a source
// polynomial with zero constant term, written in the branch's own local
// coordinates x1..xn centered at its source point.
struct Branch {
  std::vector<Poly> components;

  int target_dim() const { return static_cast<int>(components.size()); }
  bool operator==(const Branch&) const = default;
};

// Multigerm with r branches sharing the source and target dimensions.
// The source point set is abstracted away: only branch indices remain.
struct MultiGerm {
  int n = 0;
  int p = 0;
  std::vector<Branch> branches;

  int r() const { return static_cast<int>(branches.size()); }
  bool operator==(const MultiGerm&) const = default;
  std::string summary() const;
};

// Vector field along the germ: per branch a p-tuple of source polynomials.
struct FieldAlongGerm {
  std::vector<std::vector<Poly>> slots;  // r x p
  bool operator==(const FieldAlongGerm&) const = default;
  bool is_zero() const;
};

// Source vector field: per branch an n-tuple of source polynomials.
struct SourceField {
  std::vector<std::vector<Poly>> slots;  // r x n
  bool operator==(const SourceField&) const = default;
  bool is_zero() const;
};

// Target vector field: p polynomials in the target variables X1..Xp.
struct TargetField {
  std::vector<Poly> components;
  bool operator==(const TargetField&) const = default;
};

// Structural checks on raw multigerm data; empty result means valid.
std::vector<std::string> validation_errors(int n, int p,
                                           const std::vector<std::vector<Poly>>& branches);

// Builds a MultiGerm or throws ValidationError listing every violation.
MultiGerm validate(int n, int p, const std::vector<std::vector<Poly>>& branches);

// tf: apply the differential of f to a source field. Slot k component i
// is sum_j d(f_{k,i})/dx_j * xi_{k,j}; branches act independently.
FieldAlongGerm tf_apply(const MultiGerm& f, const SourceField& xi);

// wf: compose a target field with f. Slot k component i is eta_i o f_k;
// the same eta feeds every branch.
FieldAlongGerm wf_apply(const MultiGerm& f, const TargetField& eta);

FieldAlongGerm zero_field(const MultiGerm& f);
SourceField zero_source_field(const MultiGerm& f);

FieldAlongGerm field_add(const FieldAlongGerm& a, const FieldAlongGerm& b);
FieldAlongGerm field_scale(const FieldAlongGerm& a, const Rational& c);
SourceField source_add(const SourceField& a, const SourceField& b);
SourceField source_scale(const SourceField& a, const Rational& c);

// Multiply every component of slot k by factors[k]. order > 0 truncates
// the products to jets of that order; order == 0 keeps them exact.
FieldAlongGerm field_mul_branchwise(const FieldAlongGerm& a, const std::vector<Poly>& factors,
                                    int order = 0);
SourceField source_mul_branchwise(const SourceField& a, const std::vector<Poly>& factors,
                                  int order = 0);

// Per-branch pullback f_k^alpha = f_{k,1}^a1 * ... * f_{k,p}^ap, truncated
// to jets of the given order when order > 0.
std::vector<Poly> pullback_power(const MultiGerm& f, const Monomial& alpha, int order = 0);

// Rendering helpers used by reports and test diagnostics.
std::string field_str(const FieldAlongGerm& v);
std::string source_field_str(const SourceField& v);

}  // namespace lowvf
