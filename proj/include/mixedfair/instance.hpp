#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mixedfair/rational.hpp"

namespace mixedfair {

// The three valuation classes the mechanisms are defined on.
//
//   binary_all                all entries of both matrices are 0 or 1
//   binary_ind_identical_div  binary indivisible values, a single divisible
//                             good every agent values at the same u > 0
//   general_two_by_two        2 agents, 1 indivisible good valued 1 by both,
//                             1 divisible good valued a and b with b > a > 1
enum class Mode {
    binary_all,
    binary_ind_identical_div,
    general_two_by_two,
};

std::string_view mode_name(Mode mode);
std::optional<Mode> mode_from_name(std::string_view name);

using Matrix = std::vector<std::vector<Rational>>;

// A fair-division instance: n agents, m indivisible goods, m_bar divisible
// goods, and the (reported) valuation matrices. Immutable after
// construction; the factories validate the mode invariants.
class Instance {
public:
    static Instance binary_all(Matrix v_ind, Matrix v_div);
    static Instance binary_ind_identical_div(Matrix v_ind, Rational u);
    static Instance general_two_by_two(Rational a, Rational b);

    int n() const { return n_; }
    int m() const { return m_; }
    int m_bar() const { return m_bar_; }
    Mode mode() const { return mode_; }

    const Rational& indivisible_value(int agent, int good) const;
    const Rational& divisible_value(int agent, int good) const;
    const Matrix& indivisible_matrix() const { return v_ind_; }
    const Matrix& divisible_matrix() const { return v_div_; }

    // The common divisible value u; set only in binary_ind_identical_div.
    const std::optional<Rational>& identical_divisible_value() const { return u_; }

    // True when some agent values the good positively. Goods valued by
    // nobody are the ones free disposal discards.
    bool indivisible_good_valued(int good) const;
    bool divisible_good_valued(int good) const;

    // Same agents and indivisible matrix, no divisible goods.
    Instance indivisible_projection() const;

    // Unilateral deviation: agent's rows replaced by the given report.
    // The resulting instance is re-validated against the same mode.
    Instance with_report(int agent, std::vector<Rational> ind_row,
                         std::vector<Rational> div_row) const;

    bool operator==(const Instance& other) const;

private:
    Instance() = default;
    void validate() const;

    int n_ = 0;
    int m_ = 0;
    int m_bar_ = 0;
    Mode mode_ = Mode::binary_all;
    Matrix v_ind_;
    Matrix v_div_;
    std::optional<Rational> u_;
};

} // namespace mixedfair
