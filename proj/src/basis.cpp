#include "qgs/basis.hpp"

#include <stdexcept>

namespace qgs {

std::string index_to_label(std::uint64_t index, int num_qubits) {
    if (num_qubits < 1 || num_qubits > 63)
        throw std::invalid_argument("index_to_label: qubit count out of range");
    if (index >> num_qubits)
        throw std::invalid_argument("index_to_label: index out of range for qubit count");
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int b = 0; b < num_qubits; ++b)
        if (index & (std::uint64_t{1} << b))
            s[static_cast<std::size_t>(num_qubits - 1 - b)] = '1';
    return s;
}

std::uint64_t label_to_index(const std::string& bits) {
    if (bits.empty() || bits.size() > 63)
        throw std::invalid_argument("label_to_index: label length out of range");
    std::uint64_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("label_to_index: bad character '" +
                                        std::string(1, c) + "' in label \"" + bits + "\"");
        idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return idx;
}

} // namespace qgs
