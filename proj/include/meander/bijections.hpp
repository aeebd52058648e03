#pragma once

#include "meander/paths.hpp"

namespace meander {

// Peak-height bijection A_{n+1} -> Motzkin_n: drop p_1 and p_{2n+2}, then
// map the pair p_{2j} p_{2j+1} via NN -> U, EN -> H, EE -> D.
MotzkinPath phi_A(const DyckPath& p);  // throws NotInA, MalformedPairs
DyckPath phi_A_inv(const MotzkinPath& m);

// Peak-height bijection B_n -> Riordan_n on the pairs p_{2j-1} p_{2j}
// with the same step table.
RiordanPath phi_B(const DyckPath& p);  // throws NotInB, MalformedPairs
DyckPath phi_B_inv(const RiordanPath& r);

}  // namespace meander
