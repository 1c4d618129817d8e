#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewclifford/presentation.hpp"

namespace skcl {

/// Bundled example presentations, addressed by identifier with optional
/// parameter slots (rational-valued):
///   fdex1        n=3; params a (default 2), b (default 1)
///   fdex2        quantum exterior algebra; params n (default 3), q (default 2)
///   fdex3        mu = -1 off the diagonal; params n (default 3),
///                ones = number of leading 1 entries in the diagonal of B
///                (default n)
///   inbetweenex1 n=4; params mu12 (2), mu13 (1), mu23 (1), b14, b24, b34,
///                b44 (all default 1)
///   zerodim      n=2, fixed
///   notsimple    n=3; param a (default 1)
///   betweenex2   n=2, fixed
Presentation make_fixture(const std::string& id, const std::map<std::string, Rat>& params = {});

const std::vector<std::string>& fixture_ids();

}  // namespace skcl
