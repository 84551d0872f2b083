#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopforge/errors.hpp"
#include "loopforge/permutation.hpp"

namespace loopforge {

class FiniteLoop;

/// Cayley table in which every row and every column is a permutation of
/// 0..n-1 (the two division equations a*x = b, y*a = b are uniquely solvable).
/// A two-sided identity may or may not exist; general isotopes of loops land
/// here until promoted.
class Quasigroup {
public:
    /// Validates the grid. Throws ShapeError on a non-square grid or
    /// out-of-range entries, LatinViolation on a repeated row/column symbol.
    static Quasigroup from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }
    int at(int x, int y) const { return table_[static_cast<size_t>(x) * n_ + y]; }

    /// The two-sided identity, if one exists.
    std::optional<int> identity() const { return identity_; }
    bool is_loop() const { return identity_.has_value(); }

    /// Promotion; throws Error when there is no two-sided identity.
    FiniteLoop as_loop() const;

    std::vector<std::vector<int>> rows() const;
    const std::vector<int>& flat_table() const { return table_; }

    bool operator==(const Quasigroup&) const = default;

private:
    friend class FiniteLoop;
    Quasigroup() = default;
    int n_ = 0;
    std::vector<int> table_;  // row-major, table_[x*n + y] = x*y
    std::optional<int> identity_;
};

/// A finite loop: quasigroup with a two-sided identity, immutable after
/// construction. Inverse mappings and the division tables are precomputed so
/// translations and divisions are O(1)/O(n).
class FiniteLoop {
public:
    /// Validates and requires a two-sided identity.
    static FiniteLoop from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int at(int x, int y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
    int mul(int x, int y) const { return at(x, y); }

    /// x \ b : the unique y with x*y = b.
    int left_divide(int x, int b) const { return inv_rows_[static_cast<size_t>(x) * n_ + b]; }
    /// b / x : the unique y with y*x = b.
    int right_divide(int b, int x) const { return inv_cols_[static_cast<size_t>(x) * n_ + b]; }

    /// L_x : y -> x*y  (row x of the table).
    Permutation left_translation(int x) const;
    /// R_x : y -> y*x  (column x of the table).
    Permutation right_translation(int x) const;

    /// J_rho : x -> x^rho, the right inverse (x * x^rho = e).
    const Permutation& j_rho() const { return j_rho_; }
    /// J_lambda : x -> x^lambda, the left inverse (x^lambda * x = e).
    const Permutation& j_lambda() const { return j_lambda_; }

    int rho(int x) const { return j_rho_[x]; }
    int lambda(int x) const { return j_lambda_[x]; }

    /// True when every element has a two-sided inverse (J_rho == J_lambda).
    bool has_two_sided_inverses() const { return j_rho_ == j_lambda_; }

    std::vector<std::vector<int>> rows() const;
    const std::vector<int>& flat_table() const { return table_; }
    Quasigroup as_quasigroup() const;

    bool operator==(const FiniteLoop& rhs) const {
        return n_ == rhs.n_ && table_ == rhs.table_;
    }
    bool operator<(const FiniteLoop& rhs) const {
        return table_ < rhs.table_;  // same-order comparisons only
    }

private:
    friend FiniteLoop loop_from_flat(int n, std::vector<int> table);
    FiniteLoop() = default;
    void finish_construction();  // identity, inverse maps, division tables

    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_rows_;  // inv_rows_[x*n + b] = x \ b
    std::vector<int> inv_cols_;  // inv_cols_[x*n + b] = b / x
    Permutation j_rho_, j_lambda_;
};

/// Internal fast path: validates `table` (flat row-major) and promotes.
FiniteLoop loop_from_flat(int n, std::vector<int> table);

/// `(xp, qp) = (xp)q` convention restated as a free function, matching the
/// contract name; identical to p.then(q).
Permutation compose(const Permutation& p, const Permutation& q);

/// Returns (J_rho, J_lambda).
std::pair<Permutation, Permutation> inverse_maps(const FiniteLoop& L);

// ---- .loop text format -----------------------------------------------------
// line 1: n. Lines 2..n+1: the n rows, space separated. Canonical on write:
// single spaces, no trailing whitespace, every line LF-terminated.

std::string to_loop_text(const FiniteLoop& L);
FiniteLoop loop_from_text(const std::string& text);

nlohmann::json loop_to_json(const FiniteLoop& L);     // {"n":..., "table":[[...]]}
FiniteLoop loop_from_json(const nlohmann::json& j);

nlohmann::json permutation_to_json(const Permutation& p);  // plain image array
Permutation permutation_from_json(const nlohmann::json& j);

FiniteLoop read_loop_file(const std::string& path);
void write_loop_file(const std::string& path, const FiniteLoop& L);

}  // namespace loopforge
