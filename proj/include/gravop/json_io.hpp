#pragma once

#include <json.hpp>

#include "gravop/arnold.hpp"
#include "gravop/gravity.hpp"
#include "gravop/poisson.hpp"
#include "gravop/profile.hpp"
#include "gravop/unitary.hpp"

namespace gravop::json_io {

using nlohmann::json;

/// Ring elements:
///   {"n":3,"d":2,"flavor":"conf",
///    "terms":[{"coeff":-1,"c":0,"monomial":[[1,2],[1,3]]}]}
/// Monomial pairs are canonical (i < j) with strictly increasing second
/// components. Coefficients are numbers when they fit in 64 bits and decimal
/// strings otherwise; both are accepted on input.
json to_json(const arnold::RingElement& e);
arnold::RingElement ring_element_from_json(const json& j);

/// Operad elements:
///   {"n":4,"d":2,"terms":[{"coeff":"1","blocks":[{"word":[1,3]},{"word":[2,4]}]}]}
/// with coefficients as exact integer strings. A bare monomial
/// {"n":4,"d":2,"blocks":[...]} is accepted on input as a single term.
json to_json(const poisson::OperadElement& e);
poisson::OperadElement operad_element_from_json(const json& j);

json to_json(const GradedRankProfile& profile);

/// Verification reports: rows of {degree, rank_kernel, rank_Y, rank_ring, pass}
/// and friends, plus aggregate pass flags.
json to_json(const unitary::KernelReport& report);
json to_json(const unitary::SplittingReport& report);
json to_json(const gravity::MainTheoremReport& report);
json to_json(const gravity::CCompatibilityReport& report);

/// One gravity-relation check:
///   {"check":"gravity_relation","k":3,"l":2,"d":2,"parities":[...],"pass":true}
json gravity_relation_json(int k, int l, int d, const std::vector<int>& parities, bool pass);

} // namespace gravop::json_io
