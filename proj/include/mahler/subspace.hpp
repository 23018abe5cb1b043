/*
   Copyright 2026 the mahler-relations authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "number_field.hpp"

namespace mahler {

/// Reduced row echelon form in place; returns the pivot columns.
/// Tie-breaking is canonical: leftmost pivot first, pivots scaled to 1,
/// rows sorted by pivot column, zero rows dropped.
template <class T>
std::vector<size_t> rref(std::vector<std::vector<T>>& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    size_t m = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < m && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        T inv = rows[r][c].one_like() / rows[r][c];
        for (size_t j = c; j < m; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            T f = rows[i][c];
            for (size_t j = c; j < m; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

/// Row-reduced basis of a subspace of k^ambient. Canonical: comparing two
/// SubspaceBasis values for equality compares the subspaces.
class SubspaceBasis {
   public:
    SubspaceBasis() : ambient_(0) {}
    explicit SubspaceBasis(size_t ambient) : ambient_(ambient) {}
    SubspaceBasis(size_t ambient, std::vector<std::vector<FieldElem>> generators) : ambient_(ambient) {
        for (const auto& g : generators)
            if (g.size() != ambient) throw Error("subspace generator has wrong ambient dimension");
        rows_ = std::move(generators);
        pivots_ = rref(rows_);
    }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<FieldElem>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool operator==(const SubspaceBasis& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
    bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }

    bool contains(const std::vector<FieldElem>& v) const {
        if (v.size() != ambient_) throw Error("vector has wrong ambient dimension");
        std::vector<FieldElem> w = v;
        for (size_t r = 0; r < rows_.size(); ++r) {
            const FieldElem& c = w[pivots_[r]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j) w[j] = w[j] - c * rows_[r][j];
        }
        for (const auto& c : w)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Coordinates of v over the basis rows, if v lies in the subspace.
    std::optional<std::vector<FieldElem>> coordinates(const std::vector<FieldElem>& v) const {
        std::vector<FieldElem> w = v, coords;
        coords.reserve(rows_.size());
        for (size_t r = 0; r < rows_.size(); ++r) {
            FieldElem c = w[pivots_[r]];
            coords.push_back(c);
            if (c.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j) w[j] = w[j] - c * rows_[r][j];
        }
        for (const auto& c : w)
            if (!c.is_zero()) return std::nullopt;
        return coords;
    }

   private:
    size_t ambient_;
    std::vector<std::vector<FieldElem>> rows_;
    std::vector<size_t> pivots_;
};

/// Echelonized basis of U + V.
inline SubspaceBasis subspace_sum(const SubspaceBasis& u, const SubspaceBasis& v) {
    if (u.ambient() != v.ambient()) throw Error("subspace sum: ambient dimension mismatch");
    std::vector<std::vector<FieldElem>> rows = u.rows();
    rows.insert(rows.end(), v.rows().begin(), v.rows().end());
    return SubspaceBasis(u.ambient(), std::move(rows));
}

/// {v in V : v_j = 0 for every j outside `support`}, as a basis in the full ambient space.
inline SubspaceBasis subspace_restrict_support(const SubspaceBasis& v, const std::vector<size_t>& support) {
    std::vector<bool> keep(v.ambient(), false);
    for (size_t j : support) keep[j] = true;
    std::vector<size_t> complement;
    for (size_t j = 0; j < v.ambient(); ++j)
        if (!keep[j]) complement.push_back(j);
    // Solve c . B_complement = 0 for coefficient vectors c over the basis rows.
    std::vector<std::vector<FieldElem>> bc;
    for (const auto& row : v.rows()) {
        std::vector<FieldElem> r;
        r.reserve(complement.size());
        for (size_t j : complement) r.push_back(row[j]);
        bc.push_back(std::move(r));
    }
    // Left kernel of the dim x |complement| matrix bc.
    size_t r = bc.size();
    std::vector<std::vector<FieldElem>> aug;  // [bc | I]
    for (size_t i = 0; i < r; ++i) {
        std::vector<FieldElem> row = bc[i];
        for (size_t j = 0; j < r; ++j) row.push_back(i == j ? FieldElem(1) : FieldElem(0));
        aug.push_back(std::move(row));
    }
    rref(aug);
    std::vector<std::vector<FieldElem>> combos;
    for (const auto& row : aug) {
        bool zero_left = true;
        for (size_t j = 0; j < complement.size(); ++j)
            if (!row[j].is_zero()) {
                zero_left = false;
                break;
            }
        if (!zero_left) continue;
        combos.emplace_back(row.begin() + complement.size(), row.end());
    }
    std::vector<std::vector<FieldElem>> out;
    for (const auto& c : combos) {
        std::vector<FieldElem> vec(v.ambient(), FieldElem(0));
        for (size_t i = 0; i < r; ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < v.ambient(); ++j) vec[j] = vec[j] + c[i] * v.rows()[i][j];
        }
        out.push_back(std::move(vec));
    }
    return SubspaceBasis(v.ambient(), std::move(out));
}

/// Project basis vectors onto the listed coordinates (in the given order).
inline SubspaceBasis subspace_project(const SubspaceBasis& v, const std::vector<size_t>& coords) {
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& row : v.rows()) {
        std::vector<FieldElem> r;
        r.reserve(coords.size());
        for (size_t j : coords) r.push_back(row[j]);
        rows.push_back(std::move(r));
    }
    return SubspaceBasis(coords.size(), std::move(rows));
}

/// Echelonized basis of the left kernel {x : x M = 0} of an r x c matrix.
/// dim kernel = r - rank(M). The zero matrix yields the full space.
inline SubspaceBasis left_kernel(const Matrix<FieldElem>& m) {
    size_t r = m.rows(), c = m.cols();
    // Row-reduce [M | I]; rows whose M-part vanished span the left kernel.
    std::vector<std::vector<FieldElem>> aug;
    aug.reserve(r);
    for (size_t i = 0; i < r; ++i) {
        std::vector<FieldElem> row;
        row.reserve(c + r);
        for (size_t j = 0; j < c; ++j) row.push_back(m(i, j));
        for (size_t j = 0; j < r; ++j) row.push_back(i == j ? FieldElem(1) : FieldElem(0));
        aug.push_back(std::move(row));
    }
    rref(aug);
    std::vector<std::vector<FieldElem>> kernel;
    for (const auto& row : aug) {
        bool zero_left = true;
        for (size_t j = 0; j < c; ++j)
            if (!row[j].is_zero()) {
                zero_left = false;
                break;
            }
        if (zero_left) kernel.emplace_back(row.begin() + c, row.end());
    }
    return SubspaceBasis(r, std::move(kernel));
}

}  // namespace mahler
