#pragma once

#include <optional>
#include <span>

#include "monreg/initreg.hpp"

namespace monreg::initreg::detail {

/// A minimal generator divisible by m, if any.
std::optional<Monomial> generator_divisible_by(const MonomialIdeal& ideal, const Monomial& m);

/// Conditions tying different forms together: disjoint supports, no
/// generator divisible by two pair tails, and the N(b_{j,r}) conditions
/// between triples and against pairs. Per-form criteria are not rechecked.
void cross_conditions(const MonomialIdeal& ideal, std::span<const Pair> pairs, std::span<const Triple> triples,
                      Verdict& out);

}  // namespace monreg::initreg::detail
