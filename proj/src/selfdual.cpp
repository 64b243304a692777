#include "gsemi/selfdual.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gsemi/duality.hpp"

namespace gsemi {

namespace {

bool is_palindrome(const std::vector<Int>& v, std::size_t first, std::size_t len) {
    for (std::size_t i = 0; i < len / 2; ++i) {
        if (v[first + i] != v[first + len - 1 - i]) return false;
    }
    return true;
}

// Odd column count 2l+1: top fully palindromic, bottom palindromic in its
// first 2l entries with the last entry free.
bool matches_odd_palindrome(const PathMatrix& m) {
    const std::size_t c = m.columns();
    return is_palindrome(m.top, 0, c) && is_palindrome(m.bottom, 0, c - 1);
}

// Even column count 2l: top fully palindromic, bottom an odd palindrome of
// length 2l-1 plus a free last entry.
bool matches_even_even(const PathMatrix& m) {
    const std::size_t c = m.columns();
    return is_palindrome(m.top, 0, c) && is_palindrome(m.bottom, 0, c - 1);
}

// Even column count 2l: free first top entry followed by an odd palindrome,
// bottom fully palindromic.
bool matches_odd_odd(const PathMatrix& m) {
    const std::size_t c = m.columns();
    return is_palindrome(m.top, 1, c - 1) && is_palindrome(m.bottom, 0, c);
}

bool matrix_selfdual(const PathMatrix& m) {
    return matrix_equiv(m, dual_matrix(m));
}

Int row_sum(const std::vector<Int>& v) {
    return std::accumulate(v.begin(), v.end(), Int{0});
}

} // namespace

bool is_selfdual(const LeanSet& lean) {
    return matrix_selfdual(lean_to_matrix(lean));
}

SelfdualForm classify_form(const PathMatrix& m) {
    if (!matrix_selfdual(m)) return {SelfdualKind::NotSelfdual, std::nullopt, 0};
    const std::size_t c = m.columns();
    if (c % 2 == 1) {
        for (std::size_t r = 0; r < c; ++r) {
            if (matches_odd_palindrome(rotate(m, r))) {
                return {SelfdualKind::OddPalindrome, (c - 1) / 2, r};
            }
        }
    } else {
        for (std::size_t r = 0; r < c; ++r) {
            if (matches_even_even(rotate(m, r))) {
                return {SelfdualKind::EvenEvenBlocks, c / 2 - 1, r};
            }
        }
        for (std::size_t r = 0; r < c; ++r) {
            if (matches_odd_odd(rotate(m, r))) {
                return {SelfdualKind::OddOddBlocks, c / 2, r};
            }
        }
    }
    throw internal_consistency_error("selfdual matrix matches no palindromic form");
}

bool CensusTable::ok() const {
    if (total_observed != total_expected) return false;
    return std::all_of(rows.begin(), rows.end(),
                       [](const CensusRow& r) { return r.observed == r.expected; });
}

CensusTable census(const NumericalSemigroup& gamma) {
    const Int alpha = gamma.alpha();
    const Int beta = gamma.beta();
    const Int ha = alpha / 2;
    const Int hb = beta / 2;

    std::map<std::size_t, Int> expected;
    if (alpha % 2 == 1 && beta % 2 == 1) {
        for (Int l = 0; l <= ha; ++l) {
            expected[static_cast<std::size_t>(2 * l + 1)] = binomial(ha, l) * binomial(hb, l);
        }
    } else if (alpha % 2 == 0) {
        for (Int l = 0; l <= alpha / 2 - 1; ++l) {
            expected[static_cast<std::size_t>(2 * l + 1)] =
                binomial(alpha / 2 - 1, l) * binomial(hb, l);
        }
        for (Int l = 1; l <= alpha / 2; ++l) {
            expected[static_cast<std::size_t>(2 * l)] =
                binomial(alpha / 2 - 1, l - 1) * binomial(hb, l);
        }
    } else {
        for (Int l = 0; l <= ha; ++l) {
            expected[static_cast<std::size_t>(2 * l + 1)] =
                binomial(ha, l) * binomial(beta / 2 - 1, l);
        }
        for (Int l = 1; l <= ha; ++l) {
            expected[static_cast<std::size_t>(2 * l)] =
                binomial(ha, l) * binomial(beta / 2 - 1, l - 1);
        }
    }

    std::map<std::size_t, Int> observed;
    Int total_observed = 0;
    for_each_class(gamma, [&](const LeanSet& lean) {
        if (is_selfdual(lean)) {
            ++observed[lean.size()];
            ++total_observed;
        }
    });

    CensusTable table;
    table.alpha = alpha;
    table.beta = beta;
    table.total_observed = total_observed;
    table.total_expected = binomial(ha + hb, ha);
    std::map<std::size_t, CensusRow> rows;
    for (const auto& [count, value] : expected) {
        if (value != 0) rows[count] = {count, 0, value};
    }
    for (const auto& [count, value] : observed) {
        rows[count].generator_count = count;
        rows[count].observed = value;
    }
    for (const auto& [count, row] : rows) table.rows.push_back(row);
    return table;
}

namespace {

// Rotation exhibiting form (5.1); throws when absent.
std::pair<PathMatrix, std::size_t> find_odd_form(const PathMatrix& m) {
    for (std::size_t r = 0; r < m.columns(); ++r) {
        PathMatrix rot = rotate(m, r);
        if (matches_odd_palindrome(rot)) return {std::move(rot), r};
    }
    throw std::invalid_argument("matrix is not in a recognized selfdual form");
}

} // namespace

PathMatrix parity_bijection(const NumericalSemigroup& gamma, const PathMatrix& m,
                            ParityDirection direction) {
    const Int alpha = gamma.alpha();
    const Int beta = gamma.beta();
    if (row_sum(m.top) != alpha || row_sum(m.bottom) != beta) {
        throw std::invalid_argument("matrix row sums do not match the semigroup");
    }
    if (!matrix_selfdual(m)) {
        throw std::invalid_argument("parity bijection is defined on selfdual matrices");
    }
    const std::size_t c = m.columns();

    PathMatrix result;
    switch (direction) {
        case ParityDirection::AlphaUp: {
            if (alpha % 2 != 0) throw std::invalid_argument("alpha_up requires alpha even");
            if (c % 2 == 1) {
                auto [rot, r] = find_odd_form(m);
                rot.top[(c - 1) / 2] += 1;
                result = std::move(rot);
            } else {
                // Form with the even bottom entry rotated into the splitting slot.
                const std::size_t l = c / 2;
                PathMatrix rot;
                bool found = false;
                for (std::size_t r = 0; r < c && !found; ++r) {
                    rot = rotate(m, r);
                    found = matches_even_even(rot) && rot.bottom[l - 1] % 2 == 0;
                }
                if (!found) {
                    throw std::invalid_argument("matrix is not in a recognized selfdual form");
                }
                const Int half = rot.bottom[l - 1] / 2;
                result.top.assign(rot.top.begin(), rot.top.begin() + l);
                result.top.push_back(1);
                result.top.insert(result.top.end(), rot.top.begin() + l, rot.top.end());
                result.bottom.assign(rot.bottom.begin(), rot.bottom.begin() + (l - 1));
                result.bottom.push_back(half);
                result.bottom.push_back(half);
                result.bottom.insert(result.bottom.end(), rot.bottom.begin() + l,
                                     rot.bottom.end());
            }
            break;
        }
        case ParityDirection::AlphaDown: {
            if (alpha % 2 != 1) throw std::invalid_argument("alpha_down requires alpha odd");
            auto [rot, r] = find_odd_form(m);
            const std::size_t l = (c - 1) / 2;
            if (rot.top[l] > 1) {
                rot.top[l] -= 1;
                result = std::move(rot);
            } else {
                // Remove the unit center column and merge the split bottom entry.
                result.top.assign(rot.top.begin(), rot.top.begin() + l);
                result.top.insert(result.top.end(), rot.top.begin() + l + 1, rot.top.end());
                result.bottom.assign(rot.bottom.begin(), rot.bottom.begin() + (l - 1));
                result.bottom.push_back(2 * rot.bottom[l - 1]);
                result.bottom.insert(result.bottom.end(), rot.bottom.begin() + l + 1,
                                     rot.bottom.end());
            }
            break;
        }
        case ParityDirection::BetaUp: {
            if (beta % 2 != 0) throw std::invalid_argument("beta_up requires beta even");
            if (c % 2 == 1) {
                auto [rot, r] = find_odd_form(m);
                rot.bottom[c - 1] += 1;
                result = std::move(rot);
            } else {
                PathMatrix rot;
                bool found = false;
                for (std::size_t r = 0; r < c && !found; ++r) {
                    rot = rotate(m, r);
                    found = matches_odd_odd(rot) && rot.top[0] % 2 == 0;
                }
                if (!found) {
                    throw std::invalid_argument("matrix is not in a recognized selfdual form");
                }
                const Int half = rot.top[0] / 2;
                result.top.push_back(half);
                result.top.insert(result.top.end(), rot.top.begin() + 1, rot.top.end());
                result.top.push_back(half);
                result.bottom = rot.bottom;
                result.bottom.push_back(1);
            }
            break;
        }
        case ParityDirection::BetaDown: {
            if (beta % 2 != 1) throw std::invalid_argument("beta_down requires beta odd");
            auto [rot, r] = find_odd_form(m);
            if (rot.bottom[c - 1] > 1) {
                rot.bottom[c - 1] -= 1;
                result = std::move(rot);
            } else {
                // Drop the trailing unit column and merge the split top entry.
                result.top.push_back(2 * rot.top[0]);
                result.top.insert(result.top.end(), rot.top.begin() + 1, rot.top.end() - 1);
                result.bottom.assign(rot.bottom.begin(), rot.bottom.end() - 1);
            }
            break;
        }
    }

    const Int want_alpha = alpha + (direction == ParityDirection::AlphaUp
                                        ? 1
                                        : direction == ParityDirection::AlphaDown ? -1 : 0);
    const Int want_beta = beta + (direction == ParityDirection::BetaUp
                                      ? 1
                                      : direction == ParityDirection::BetaDown ? -1 : 0);
    if (row_sum(result.top) != want_alpha || row_sum(result.bottom) != want_beta ||
        !matrix_selfdual(result)) {
        throw internal_consistency_error("parity bijection produced an invalid matrix");
    }
    return result;
}

bool parity_invariant_check(const NumericalSemigroup& gamma) {
    if (gamma.alpha() % 2 == 0 || gamma.beta() % 2 == 0) {
        throw std::invalid_argument("parity invariant applies to odd alpha and beta only");
    }
    bool ok = true;
    for_each_class(gamma, [&](const LeanSet& lean) {
        if (lean.size() % 2 == 0 && is_selfdual(lean)) ok = false;
    });
    return ok;
}

} // namespace gsemi
