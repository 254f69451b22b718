#pragma once

#include <vector>

#include "uqfm/algebra.hpp"

namespace uqfm::testsupport {

// Reference product: a word rewriter that applies one defining relation at
// a time until the word is sorted into F..K..H..E order, with adjacent
// inverse pairs cancelled. Entirely independent of the memoized block
// expansion in the library engine; the tests compare the two bit-exactly.
AlgElement step_rewrite_product(const AlgElement& x, const AlgElement& y);

} // namespace uqfm::testsupport
