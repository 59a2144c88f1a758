#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

// A structural guarantee of the insertion machinery failed at run time
// (rectification found no landing site, a ledger never emptied, a recorded
// row fell outside 1..r).  Always indicates a bug, never bad user input.
struct GuaranteeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two distinct admissible ledgers were found for the same target permutation.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rcg
