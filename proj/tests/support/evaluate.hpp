#pragma once

#include <string>

#include "gauss_forge/corpus.hpp"

namespace gf_test {

/// Recomputes one expected value of a corpus entry with the engine. Keys:
/// casson, mu123, a2, pattern keys (X, X1p, ..., Xc3p), lk_i_j (counting)
/// and gauss_lk_i_j (linking integral, rounded after a 1e-6 closeness check).
long long evaluate(const gauss_forge::CorpusEntry& entry, const std::string& key);

}  // namespace gf_test
