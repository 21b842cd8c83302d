#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sga/arrangement.hpp"
#include "sga/intpoly.hpp"

namespace sga {

enum class FreenessStatus { is_free, non_free, out_of_range };

struct FreenessResult {
    FreenessStatus status = FreenessStatus::out_of_range;
    std::vector<long> exponents;                  // multiset, ascending, zeros included
    std::vector<std::vector<std::string>> basis;  // each row: dim polynomial components
    std::string detail;                           // obstruction or verification note
    IntPoly chi;
};

/// Exact freeness decision for dim <= 5, at most 16 hyperplanes: checks that
/// the characteristic polynomial splits over the non-negative integers, then
/// searches the graded derivation pieces at the root degrees for a basis whose
/// coefficient determinant is a nonzero multiple of the defining polynomial.
FreenessResult freeness_decide(const Arrangement& a);

}  // namespace sga
