#pragma once

#include <string>

#include "prolate/bispectral/symspace.hpp"
#include "prolate/darboux/verify.hpp"

namespace prolate::darboux {

using bispectral::SymSpace;

struct SSpaces {
  /// P M aP over M in B_sym^{l1-rho1, l2}; z-side eps N b(M) N.
  SymSpace s1;
  /// V M V over M in B_sym^{l1, l2-rho2}; z-side eps' N^-1 bR b(M) a(bR) N^-1.
  SymSpace s2;
  int rho1 = 0;
  int rho2 = 0;
};

/// Throws UnverifiedData unless the datum is certified and
/// NotSymmetricGenerator if a generator is not fixed by a on either side.
SSpaces s_spaces(const DarbouxData& d, int l1, int l2);

struct DimReport {
  int l1 = 0;
  int l2 = 0;
  int rho1 = 0;
  int rho2 = 0;
  int dim_s1 = 0;
  int dim_s2 = 0;
  int dim_sum = 0;
  int dim_intersection = 0;
  /// (l1+1)(l2+1) - rho1 rho2
  int sum_bound = 0;
  /// (l1-rho1+1)(l2-rho2+1) when both l_i >= rho_i
  int intersection_bound = 0;
  bool intersection_bound_applies = false;
  bool parity_checked = false;
  bool parity_ok = true;

  bool ok() const {
    return dim_sum >= sum_bound && (!intersection_bound_applies || dim_intersection <= intersection_bound) &&
           parity_ok;
  }
};

/// Exact ranks and the dimension bounds. Throws BoundViolated when a bound
/// fails unless `throw_on_violation` is false.
DimReport dim_bounds_check(const DarbouxData& d, int l1, int l2, bool throw_on_violation = true);
DimReport dim_bounds_check(const SSpaces& s, const DarbouxData& d, int l1, int l2, bool throw_on_violation = true);

std::string to_string(const DimReport& r);

}  // namespace prolate::darboux
