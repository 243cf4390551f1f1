#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "halltab/config.hpp"
#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/numeric.hpp"
#include "halltab/shellability.hpp"

namespace halltab {

/** A cell of a Young diagram, 1-based (row 1 on top, column 1 on the left). */
struct cell {
    int row;
    int col;
    friend bool operator==(const cell&, const cell&) = default;
    friend auto operator<=>(const cell&, const cell&) = default; // row-major order
};

/**
 * A skew shape lambda/mu: the cells of the Young diagram of lambda outside
 * the diagram of mu.  lambda is a weakly decreasing sequence of positive
 * integers; mu (possibly empty, trailing zeros dropped) fits inside lambda
 * componentwise.  Cells are stored row-major.
 */
class skew_shape {
public:
    explicit skew_shape(std::vector<int> lambda, std::vector<int> mu = {})
        : lambda_(std::move(lambda)), mu_(std::move(mu)) {
        for (std::size_t i = 0; i < lambda_.size(); ++i) {
            if (lambda_[i] < 1) throw invalid_input("skew_shape: lambda parts must be positive");
            if (i > 0 && lambda_[i] > lambda_[i - 1])
                throw invalid_input("skew_shape: lambda must be weakly decreasing");
        }
        for (std::size_t i = 0; i < mu_.size(); ++i) {
            if (mu_[i] < 0) throw invalid_input("skew_shape: mu parts must be non-negative");
            if (i > 0 && mu_[i] > mu_[i - 1])
                throw invalid_input("skew_shape: mu must be weakly decreasing");
        }
        while (!mu_.empty() && mu_.back() == 0) mu_.pop_back();
        if (mu_.size() > lambda_.size())
            throw invalid_input("skew_shape: mu has more parts than lambda");
        for (std::size_t i = 0; i < mu_.size(); ++i)
            if (mu_[i] > lambda_[i])
                throw invalid_input("skew_shape: mu does not fit inside lambda");
        for (int i = 1; i <= rows(); ++i)
            for (int j = mu_at(i) + 1; j <= lambda_at(i); ++j)
                cells_.push_back({i, j});
    }

    const std::vector<int>& lambda() const { return lambda_; }
    const std::vector<int>& mu() const { return mu_; }
    int rows() const { return static_cast<int>(lambda_.size()); }

    /** Row length of lambda at a 1-based row (0 beyond the last row). */
    int lambda_at(int row) const {
        return row >= 1 && row <= rows() ? lambda_[static_cast<std::size_t>(row - 1)] : 0;
    }

    /** Row length of mu at a 1-based row (0 beyond mu's parts). */
    int mu_at(int row) const {
        return row >= 1 && row <= static_cast<int>(mu_.size())
                   ? mu_[static_cast<std::size_t>(row - 1)]
                   : 0;
    }

    bool is_normal() const { return mu_.empty(); }

    /** Cells of lambda/mu in row-major order; their 1-based positions are
     *  the canonical ground-set numbering for set-family views. */
    const std::vector<cell>& cells() const { return cells_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }

    bool in_lambda(cell c) const {
        return c.row >= 1 && c.row <= rows() && c.col >= 1 && c.col <= lambda_at(c.row);
    }

    bool contains(cell c) const { return in_lambda(c) && c.col > mu_at(c.row); }

    /** Canonical 1-based index of a cell of lambda/mu. */
    int cell_index(cell c) const {
        const auto pos = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (pos == cells_.end() || *pos != c)
            throw invalid_input("skew_shape: cell is not in lambda/mu");
        return static_cast<int>(pos - cells_.begin()) + 1;
    }

    bool operator==(const skew_shape& other) const = default;

private:
    std::vector<int> lambda_;
    std::vector<int> mu_;
    std::vector<cell> cells_;
};

/**
 * The hook of a cell of lambda: the cell itself, everything to its right in
 * the same row, and everything below it in the same column (all within
 * lambda).  For a cell of lambda/mu the hook never meets mu (mu is weakly
 * decreasing), so no further restriction is needed when forming members of
 * the hook family.  Returned row-major.
 */
inline std::vector<cell> hook_cells(const skew_shape& shape, cell c) {
    if (!shape.in_lambda(c))
        throw invalid_input("hook_cells: cell is outside lambda");
    std::vector<cell> out;
    for (int j = c.col; j <= shape.lambda_at(c.row); ++j) out.push_back({c.row, j});
    for (int i = c.row + 1; i <= shape.rows(); ++i)
        if (shape.lambda_at(i) >= c.col) out.push_back({i, c.col});
    return out;
}

/** Hook length: number of cells in the hook. */
inline int hook_length(const skew_shape& shape, cell c) {
    if (!shape.in_lambda(c))
        throw invalid_input("hook_length: cell is outside lambda");
    int arm = shape.lambda_at(c.row) - c.col;
    int leg = 0;
    for (int i = c.row + 1; i <= shape.rows(); ++i)
        if (shape.lambda_at(i) >= c.col) ++leg;
    return arm + leg + 1;
}

/** The hook family of a shape together with its canonical transversal. */
struct hook_family_result {
    set_family family;  // ground set = cells numbered row-major
    transversal rep;    // t(H_r) = r: member of cell r represented by r itself
};

/**
 * The family {H_r : r in lambda/mu} over the row-major cell numbering, one
 * member per cell, with the transversal t(H_r) = r.  The family is
 * shellable with this t as its unique transversal (tested invariant).
 */
inline hook_family_result hook_family(const skew_shape& shape) {
    if (shape.cell_count() == 0)
        throw invalid_input("hook_family: shape has no cells");
    std::vector<std::vector<int>> members;
    std::vector<int> rep;
    members.reserve(static_cast<std::size_t>(shape.cell_count()));
    rep.reserve(static_cast<std::size_t>(shape.cell_count()));
    for (const cell& r : shape.cells()) {
        std::vector<int> indices;
        for (const cell& h : hook_cells(shape, r))
            indices.push_back(shape.cell_index(h)); // stays inside lambda/mu for r in lambda/mu
        members.push_back(std::move(indices));
        rep.push_back(shape.cell_index(r));
    }
    return {set_family(shape.cell_count(), std::move(members)), transversal(std::move(rep))};
}

/** Inner corners of a partition: cells whose removal leaves a partition. */
inline std::vector<cell> inner_corners(const std::vector<int>& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) throw invalid_input("inner_corners: parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw invalid_input("inner_corners: lambda must be weakly decreasing");
    }
    std::vector<cell> out;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (i + 1 == lambda.size() || lambda[i] > lambda[i + 1])
            out.push_back({static_cast<int>(i) + 1, lambda[i]});
    return out;
}

/** Cells of lambda/mu lying in exactly one hook — the unique-element set of
 *  the hook family, mapped back to cells. */
inline std::vector<cell> outer_corner_cells(const skew_shape& shape) {
    const auto hf = hook_family(shape);
    std::vector<cell> out;
    for (int index : unique_element_set(hf.family))
        out.push_back(shape.cells()[static_cast<std::size_t>(index - 1)]);
    return out;
}

/**
 * A filling of the cells of a shape with positive integers whose entry set
 * is exactly [m] for some m <= cell count (contiguity is enforced here, so
 * every tableau induces a surjective word).  Entries are stored row-major,
 * aligned with shape.cells().
 */
class tableau {
public:
    tableau(skew_shape shape, std::vector<int> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != shape_.cell_count())
            throw invalid_input("tableau: entry count differs from cell count");
        if (entries_.empty()) throw invalid_input("tableau: shape has no cells");
        max_entry_ = *std::max_element(entries_.begin(), entries_.end());
        std::vector<char> hit(static_cast<std::size_t>(max_entry_) + 1, 0);
        for (int e : entries_) {
            if (e < 1) throw invalid_input("tableau: entries must be positive");
            hit[static_cast<std::size_t>(e)] = 1;
        }
        for (int v = 1; v <= max_entry_; ++v)
            if (!hit[static_cast<std::size_t>(v)])
                throw invalid_input("tableau: entry set must be a contiguous range [1, m]");
    }

    const skew_shape& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }
    int max_entry() const { return max_entry_; }

    int entry_at(cell c) const {
        return entries_[static_cast<std::size_t>(shape_.cell_index(c) - 1)];
    }

    bool operator==(const tableau& other) const = default;

private:
    skew_shape shape_;
    std::vector<int> entries_;
    int max_entry_;
};

/** True iff the entries are a bijection onto [cell count]. */
inline bool is_generalized_standard(const tableau& t) {
    return t.max_entry() == t.shape().cell_count();
}

/** The word induced by a tableau: value at canonical cell index = entry. */
inline surjective_word to_word(const tableau& t) {
    return surjective_word(t.max_entry(), t.entries());
}

/**
 * Standard tableau predicate: bijective entries strictly increasing along
 * every row and every column.  Requires a generalized standard filling.
 */
inline bool is_standard(const tableau& t) {
    if (!is_generalized_standard(t))
        throw invalid_input("is_standard: tableau entries are not a bijection");
    const auto& shape = t.shape();
    for (const cell& c : shape.cells()) {
        const cell right{c.row, c.col + 1};
        if (shape.contains(right) && t.entry_at(c) >= t.entry_at(right)) return false;
        const cell below{c.row + 1, c.col};
        if (shape.contains(below) && t.entry_at(c) >= t.entry_at(below)) return false;
    }
    return true;
}

/**
 * The balanced-tableau demands of a normal shape: at cell (i,j) the demand
 * is the column leg length i' - i + 1, where i' is the last row whose part
 * still covers column j.  Demands are row-major, matching the hook family.
 */
inline configuration balanced_configuration(const skew_shape& shape) {
    if (!shape.is_normal())
        throw invalid_input("balanced_configuration: shape must be normal (mu empty)");
    if (shape.cell_count() == 0)
        throw invalid_input("balanced_configuration: shape has no cells");
    std::vector<int> demands;
    demands.reserve(static_cast<std::size_t>(shape.cell_count()));
    for (const cell& c : shape.cells()) {
        int last_row = c.row;
        for (int i = c.row + 1; i <= shape.rows(); ++i)
            if (shape.lambda_at(i) >= c.col) last_row = i;
        demands.push_back(last_row - c.row + 1);
    }
    return configuration(std::move(demands));
}

/**
 * Balanced predicate (normal shapes): the induced word of a bijective
 * filling satisfies the balanced demands with m = n.
 */
inline bool is_balanced(const tableau& t) {
    const auto& shape = t.shape();
    const configuration f = balanced_configuration(shape); // rejects non-normal shapes
    if (!is_generalized_standard(t)) return false;
    const auto hf = hook_family(shape);
    return satisfies(to_word(t), hf.family, hf.rep, f);
}

/**
 * Brute-force count of standard tableaux of a shape: places 1..n cell by
 * cell, a cell becoming eligible once its left and upper neighbours (when
 * in the shape) are filled.  Independent of the word/satisfaction route.
 */
inline bigint count_standard(const skew_shape& shape, int max_cells = 9) {
    const int n = shape.cell_count();
    if (n == 0) return 1;
    if (n > max_cells)
        throw oracle_limit_error("count_standard: cell count exceeds brute-force bound");
    std::vector<char> filled(static_cast<std::size_t>(n), 0);
    bigint count = 0;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == n) {
            ++count;
            return;
        }
        for (int idx = 0; idx < n; ++idx) {
            if (filled[static_cast<std::size_t>(idx)]) continue;
            const cell c = shape.cells()[static_cast<std::size_t>(idx)];
            const cell left{c.row, c.col - 1};
            if (shape.contains(left) &&
                !filled[static_cast<std::size_t>(shape.cell_index(left) - 1)])
                continue;
            const cell up{c.row - 1, c.col};
            if (shape.contains(up) &&
                !filled[static_cast<std::size_t>(shape.cell_index(up) - 1)])
                continue;
            filled[static_cast<std::size_t>(idx)] = 1;
            self(self, placed + 1);
            filled[static_cast<std::size_t>(idx)] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

/**
 * The hook-length formula n! / prod of hook lengths for a normal shape.
 * The quotient is exact; a non-integer quotient would indicate a broken
 * hook computation and raises an error.
 */
inline bigint hook_length_formula(const skew_shape& shape) {
    if (!shape.is_normal())
        throw invalid_input("hook_length_formula: shape must be normal (mu empty)");
    bigint product = 1;
    for (const cell& c : shape.cells()) product *= hook_length(shape, c);
    const bigint numerator = factorial(shape.cell_count());
    if (product == 0 || numerator % product != 0)
        throw error("hook_length_formula: non-integer quotient");
    return numerator / product;
}

} // namespace halltab
