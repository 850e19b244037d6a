#include "mixedfair/instance.hpp"

#include <utility>

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

void check_matrix_shape(const Matrix& matrix, int n, const char* what) {
    if (static_cast<int>(matrix.size()) != n) {
        throw ValidationError(std::string(what) + " matrix must have one row per agent");
    }
    for (int i = 1; i < n; ++i) {
        if (matrix[i].size() != matrix[0].size()) {
            throw ValidationError(std::string(what) + " matrix rows have unequal lengths");
        }
    }
}

bool is_binary(const Rational& v) { return v == 0 || v == 1; }

} // namespace

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::binary_all: return "binary-all";
        case Mode::binary_ind_identical_div: return "binary-ind-identical-div";
        case Mode::general_two_by_two: return "general-2x2";
    }
    return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    if (name == "binary-all") return Mode::binary_all;
    if (name == "binary-ind-identical-div") return Mode::binary_ind_identical_div;
    if (name == "general-2x2") return Mode::general_two_by_two;
    return std::nullopt;
}

Instance Instance::binary_all(Matrix v_ind, Matrix v_div) {
    Instance inst;
    inst.mode_ = Mode::binary_all;
    inst.n_ = static_cast<int>(v_ind.size());
    inst.m_ = inst.n_ > 0 ? static_cast<int>(v_ind[0].size()) : 0;
    inst.m_bar_ = inst.n_ > 0 && !v_div.empty() ? static_cast<int>(v_div[0].size()) : 0;
    if (v_div.empty()) v_div.assign(inst.n_, {});
    inst.v_ind_ = std::move(v_ind);
    inst.v_div_ = std::move(v_div);
    inst.validate();
    return inst;
}

Instance Instance::binary_ind_identical_div(Matrix v_ind, Rational u) {
    Instance inst;
    inst.mode_ = Mode::binary_ind_identical_div;
    inst.n_ = static_cast<int>(v_ind.size());
    inst.m_ = inst.n_ > 0 ? static_cast<int>(v_ind[0].size()) : 0;
    inst.m_bar_ = 1;
    inst.v_ind_ = std::move(v_ind);
    inst.v_div_.assign(inst.n_, {u});
    inst.u_ = std::move(u);
    inst.validate();
    return inst;
}

Instance Instance::general_two_by_two(Rational a, Rational b) {
    Instance inst;
    inst.mode_ = Mode::general_two_by_two;
    inst.n_ = 2;
    inst.m_ = 1;
    inst.m_bar_ = 1;
    inst.v_ind_ = {{Rational(1)}, {Rational(1)}};
    inst.v_div_ = {{std::move(a)}, {std::move(b)}};
    inst.validate();
    return inst;
}

void Instance::validate() const {
    if (n_ < 1) throw ValidationError("an instance needs at least one agent");
    check_matrix_shape(v_ind_, n_, "indivisible");
    check_matrix_shape(v_div_, n_, "divisible");
    if (static_cast<int>(v_ind_[0].size()) != m_ || static_cast<int>(v_div_[0].size()) != m_bar_) {
        throw ValidationError("matrix shapes disagree with the good counts");
    }
    for (const auto& row : v_ind_) {
        for (const auto& v : row) {
            if (v < 0) throw ValidationError("values must be nonnegative");
        }
    }
    for (const auto& row : v_div_) {
        for (const auto& v : row) {
            if (v < 0) throw ValidationError("values must be nonnegative");
        }
    }
    switch (mode_) {
        case Mode::binary_all:
            for (const auto& row : v_ind_)
                for (const auto& v : row)
                    if (!is_binary(v)) throw ValidationError("binary-all requires 0/1 indivisible values");
            for (const auto& row : v_div_)
                for (const auto& v : row)
                    if (!is_binary(v)) throw ValidationError("binary-all requires 0/1 divisible values");
            break;
        case Mode::binary_ind_identical_div: {
            for (const auto& row : v_ind_)
                for (const auto& v : row)
                    if (!is_binary(v)) throw ValidationError("mode requires 0/1 indivisible values");
            if (m_bar_ != 1) throw ValidationError("mode requires exactly one divisible good");
            if (!u_ || *u_ <= 0) throw ValidationError("mode requires a common divisible value u > 0");
            for (const auto& row : v_div_)
                if (row[0] != *u_) throw ValidationError("all agents must value the divisible good at u");
            break;
        }
        case Mode::general_two_by_two: {
            if (n_ != 2 || m_ != 1 || m_bar_ != 1) {
                throw ValidationError("general-2x2 is a 2-agent, 1+1-good class");
            }
            if (v_ind_[0][0] != 1 || v_ind_[1][0] != 1) {
                throw ValidationError("general-2x2 requires unit values on the indivisible good");
            }
            const Rational& a = v_div_[0][0];
            const Rational& b = v_div_[1][0];
            if (!(b > a && a > 1)) {
                throw ValidationError("general-2x2 requires divisible values b > a > 1");
            }
            break;
        }
    }
}

const Rational& Instance::indivisible_value(int agent, int good) const {
    if (agent < 0 || agent >= n_ || good < 0 || good >= m_) {
        throw ValidationError("indivisible_value: index out of range");
    }
    return v_ind_[agent][good];
}

const Rational& Instance::divisible_value(int agent, int good) const {
    if (agent < 0 || agent >= n_ || good < 0 || good >= m_bar_) {
        throw ValidationError("divisible_value: index out of range");
    }
    return v_div_[agent][good];
}

bool Instance::indivisible_good_valued(int good) const {
    for (int i = 0; i < n_; ++i) {
        if (indivisible_value(i, good) > 0) return true;
    }
    return false;
}

bool Instance::divisible_good_valued(int good) const {
    for (int i = 0; i < n_; ++i) {
        if (divisible_value(i, good) > 0) return true;
    }
    return false;
}

Instance Instance::indivisible_projection() const {
    return binary_all(v_ind_, Matrix(n_, std::vector<Rational>{}));
}

Instance Instance::with_report(int agent, std::vector<Rational> ind_row,
                               std::vector<Rational> div_row) const {
    if (agent < 0 || agent >= n_) throw ValidationError("with_report: agent out of range");
    if (static_cast<int>(ind_row.size()) != m_ || static_cast<int>(div_row.size()) != m_bar_) {
        throw ValidationError("with_report: report rows have the wrong length");
    }
    Instance inst = *this;
    inst.v_ind_[agent] = std::move(ind_row);
    inst.v_div_[agent] = std::move(div_row);
    inst.validate();
    return inst;
}

bool Instance::operator==(const Instance& other) const {
    return n_ == other.n_ && m_ == other.m_ && m_bar_ == other.m_bar_ &&
           mode_ == other.mode_ && v_ind_ == other.v_ind_ && v_div_ == other.v_div_ &&
           u_ == other.u_;
}

} // namespace mixedfair
