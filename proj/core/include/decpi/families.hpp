#pragma once

#include "decpi/circuit.hpp"

namespace decpi {

/// AND of n gadgets x_i ∨ y_i, each written Decision(x_i, y_i, 1).
/// Has exactly 2^n prime implicants.
Circuit gadget_family(int n);

/// Decision chain of the cyclic 2-CNF (x_1 ∨ x_2) ∧ ... ∧ (x_n ∨ x_1).
Circuit chain_family(int n);

}  // namespace decpi
