#pragma once

#include <cstdint>
#include <string>

namespace qgs {

// Basis-label convention used throughout: qubit 0 is the least significant
// bit and prints rightmost, so label "001" on three qubits is index 1.
std::string index_to_label(std::uint64_t index, int num_qubits);

// Inverse of index_to_label. Throws std::invalid_argument on anything that
// is not a nonempty string of '0'/'1' of length <= 63.
std::uint64_t label_to_index(const std::string& bits);

} // namespace qgs
