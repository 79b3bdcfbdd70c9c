#pragma once

// Bound-state polynomials for N = 4 and N = 5, one entry per printed term.
// Monomials use Dij for the coupling D_ij, mi for m_i and wi^2 for omega_i^2.
// Each table equals 4^floor(N/2) * (m_1 ... m_N) * (N-th leading principal
// minor of S); see boundstate.hpp for the evaluator and the term audit.

#include <array>
#include <string_view>

namespace cho::term_tables {

struct TermSpec {
    int coefficient;
    std::string_view monomial;
};

inline constexpr std::array<TermSpec, 17> kFourOscillatorTerms{{
    {1, "D12^2 D34^2"},
    {-4, "D12^2 m3 m4 w3^2 w4^2"},
    {4, "D12 D13 D23 m4 w4^2"},
    {-2, "D12 D13 D24 D34"},
    {-2, "D12 D14 D23 D34"},
    {4, "D12 D14 D24 m3 w3^2"},
    {1, "D13^2 D24^2"},
    {-4, "D13^2 m2 m4 w2^2 w4^2"},
    {-2, "D13 D14 D23 D24"},
    {4, "D13 D14 D34 m2 w2^2"},
    {1, "D14^2 D23^2"},
    {-4, "D14^2 m2 m3 w2^2 w3^2"},
    {-4, "D23^2 m1 m4 w1^2 w4^2"},
    {4, "D23 D24 D34 m1 w1^2"},
    {-4, "D24^2 m1 m3 w1^2 w3^2"},
    {-4, "D34^2 m1 m2 w1^2 w2^2"},
    {16, "m1 m2 m3 m4 w1^2 w2^2 w3^2 w4^2"},
}};

inline constexpr std::array<TermSpec, 73> kFiveOscillatorTerms{{
    {1, "D12^2 D34^2 m5 w5^2"},
    {-1, "D12^2 D34 D35 D45"},
    {1, "D12^2 D35^2 m4 w4^2"},
    {1, "D12^2 D45^2 m3 w3^2"},
    {-4, "D12^2 m3 m4 m5 w3^2 w4^2 w5^2"},
    {-1, "D12 D13 D23 D45^2"},
    {4, "D12 D13 D23 m4 m5 w4^2 w5^2"},
    {-2, "D12 D13 D24 D34 m5 w5^2"},
    {1, "D12 D13 D24 D35 D45"},
    {1, "D12 D13 D25 D34 D45"},
    {-2, "D12 D13 D25 D35 m4 w4^2"},
    {-2, "D12 D14 D23 D34 m5 w5^2"},
    {1, "D12 D14 D23 D35 D45"},
    {-1, "D12 D14 D24 D35^2"},
    {4, "D12 D14 D24 m3 m5 w3^2 w5^2"},
    {1, "D12 D14 D25 D34 D35"},
    {-2, "D12 D14 D25 D45 m3 w3^2"},
    {1, "D12 D15 D23 D34 D45"},
    {-2, "D12 D15 D23 D35 m4 w4^2"},
    {1, "D12 D15 D24 D34 D35"},
    {-2, "D12 D15 D24 D45 m3 w3^2"},
    {-1, "D12 D15 D25 D34^2"},
    {4, "D12 D15 D25 m3 m4 w3^2 w4^2"},
    {1, "D13^2 D24^2 m5 w5^2"},
    {-1, "D13^2 D24 D25 D45"},
    {1, "D13^2 D25^2 m4 w4^2"},
    {1, "D13^2 D45^2 m2 w2^2"},
    {-4, "D13^2 m2 m4 m5 w2^2 w4^2 w5^2"},
    {-2, "D13 D14 D23 D24 m5 w5^2"},
    {1, "D13 D14 D23 D25 D45"},
    {1, "D13 D14 D24 D25 D35"},
    {-1, "D13 D14 D25^2 D34"},
    {4, "D13 D14 D34 m2 m5 w2^2 w5^2"},
    {-2, "D13 D14 D35 D45 m2 w2^2"},
    {1, "D13 D15 D23 D24 D45"},
    {-2, "D13 D15 D23 D25 m4 w4^2"},
    {-1, "D13 D15 D24^2 D35"},
    {1, "D13 D15 D24 D25 D34"},
    {-2, "D13 D15 D34 D45 m2 w2^2"},
    {4, "D13 D15 D35 m2 m4 w2^2 w4^2"},
    {1, "D14^2 D23^2 m5 w5^2"},
    {-1, "D14^2 D23 D25 D35"},
    {1, "D14^2 D25^2 m3 w3^2"},
    {1, "D14^2 D35^2 m2 w2^2"},
    {-4, "D14^2 m2 m3 m5 w2^2 w3^2 w5^2"},
    {-1, "D14 D15 D23^2 D45"},
    {1, "D14 D15 D23 D24 D35"},
    {1, "D14 D15 D23 D25 D34"},
    {-2, "D14 D15 D24 D25 m3 w3^2"},
    {-2, "D14 D15 D34 D35 m2 w2^2"},
    {4, "D14 D15 D45 m2 m3 w2^2 w3^2"},
    {1, "D15^2 D23^2 m4 w4^2"},
    {-1, "D15^2 D23 D24 D34"},
    {1, "D15^2 D24^2 m3 w3^2"},
    {1, "D15^2 D34^2 m2 w2^2"},
    {-4, "D15^2 m2 m3 m4 w2^2 w3^2 w4^2"},
    {1, "D23^2 D45^2 m1 w1^2"},
    {-4, "D23^2 m1 m4 m5 w1^2 w4^2 w5^2"},
    {4, "D23 D24 D34 m1 m5 w1^2 w5^2"},
    {-2, "D23 D24 D35 D45 m1 w1^2"},
    {-2, "D23 D25 D34 D45 m1 w1^2"},
    {4, "D23 D25 D35 m1 m4 w1^2 w4^2"},
    {1, "D24^2 D35^2 m1 w1^2"},
    {-4, "D24^2 m1 m3 m5 w1^2 w3^2 w5^2"},
    {-2, "D24 D25 D34 D35 m1 w1^2"},
    {4, "D24 D25 D45 m1 m3 w1^2 w3^2"},
    {1, "D25^2 D34^2 m1 w1^2"},
    {-4, "D25^2 m1 m3 m4 w1^2 w3^2 w4^2"},
    {-4, "D34^2 m1 m2 m5 w1^2 w2^2 w5^2"},
    {4, "D34 D35 D45 m1 m2 w1^2 w2^2"},
    {-4, "D35^2 m1 m2 m4 w1^2 w2^2 w4^2"},
    {-4, "D45^2 m1 m2 m3 w1^2 w2^2 w3^2"},
    {16, "m1 m2 m3 m4 m5 w1^2 w2^2 w3^2 w4^2 w5^2"},
}};

}  // namespace cho::term_tables
