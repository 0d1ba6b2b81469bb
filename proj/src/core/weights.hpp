#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace rimnull {

enum class WeightRegime { unconstrained, unit_modulus, quantized };

std::string to_string(WeightRegime r);
WeightRegime weight_regime_from_string(const std::string& s);

// M equally spaced unit-modulus phases e^{j 2 pi k / M}, k = 1..M (the set of
// M-th roots of unity; k = M is +1).
struct PhaseAlphabet {
    int m_levels = 2;

    explicit PhaseAlphabet(int m = 2);
    cplx value(int k) const;  // k in [1, m_levels]
    int size() const { return m_levels; }
};

// N complex rim weights with a declared regime. Quantized weights also carry
// their alphabet indices (k in [1, M]) so serialization is exact.
struct WeightVector {
    std::vector<cplx> values;
    WeightRegime regime = WeightRegime::unconstrained;
    int m_levels = 0;                // quantized only
    std::vector<int> phase_indices;  // quantized only

    std::size_t size() const { return values.size(); }

    static WeightVector ones(std::size_t n);
    static WeightVector unconstrained(std::vector<cplx> v);
    static WeightVector unit_modulus(std::vector<cplx> v);
    static WeightVector quantized(const PhaseAlphabet& a, std::vector<int> indices);

    void validate() const;
};

// Columnar text serialization.
//   unconstrained/unit-modulus:  index re im regime
//   quantized:                   index phase_index m_levels
void save_weights(const WeightVector& w, const std::string& path);
WeightVector load_weights(const std::string& path);

}  // namespace rimnull
