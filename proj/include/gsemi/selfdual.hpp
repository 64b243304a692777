#pragma once

#include <optional>
#include <vector>

#include "gsemi/syzygy.hpp"

namespace gsemi {

enum class SelfdualKind {
    OddPalindrome,  // odd column count: palindromic top, bottom palindromic except last
    EvenEvenBlocks, // even column count: palindromic top, odd bottom palindrome + free last
    OddOddBlocks,   // even column count: free first top entry + odd top palindrome, palindromic bottom
    NotSelfdual,
};

struct SelfdualForm {
    SelfdualKind kind = SelfdualKind::NotSelfdual;
    std::optional<std::size_t> pivot; // central column in the matched rotation
    std::size_t rotation = 0;         // left rotation that exhibits the form
};

// Selfduality decided at class level: the matrix is equivalent to its dual.
bool is_selfdual(const LeanSet& lean);

// Diagnostic classification of a selfdual matrix into one of the palindromic
// shapes; returns NotSelfdual for anything else.
SelfdualForm classify_form(const PathMatrix& m);

struct CensusRow {
    std::size_t generator_count = 0;
    Int observed = 0;
    Int expected = 0;
};

struct CensusTable {
    Int alpha = 0;
    Int beta = 0;
    std::vector<CensusRow> rows;
    Int total_observed = 0;
    Int total_expected = 0; // C(floor(a/2)+floor(b/2), floor(a/2))

    bool ok() const;
};

// Exhaustive selfdual count per generator count, with the closed-form
// binomial expectations alongside.
CensusTable census(const NumericalSemigroup& gamma);

enum class ParityDirection { AlphaUp, AlphaDown, BetaUp, BetaDown };

// The parity-changing bijection between selfdual matrices of <alpha,beta>
// and <alpha+-1,beta> (resp. <alpha,beta+-1>). Throws std::invalid_argument
// on wrong parity or a matrix not in a recognized selfdual form.
PathMatrix parity_bijection(const NumericalSemigroup& gamma, const PathMatrix& m,
                            ParityDirection direction);

// For alpha, beta both odd: every selfdual class has an odd generator count.
// Throws std::invalid_argument unless both generators are odd.
bool parity_invariant_check(const NumericalSemigroup& gamma);

} // namespace gsemi
