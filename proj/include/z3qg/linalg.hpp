#pragma once

#include "z3qg/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace z3qg {

template <class Key>
using SparseVector = std::map<Key, CycScalar>;

template <class Key>
void axpy(SparseVector<Key>& y, const CycScalar& a, const SparseVector<Key>& x) {
    for (const auto& [k, c] : x) {
        auto [it, inserted] = y.try_emplace(k, a * c);
        if (!inserted) {
            it->second += a * c;
            if (it->second.is_zero()) y.erase(it);
        } else if (it->second.is_zero()) {
            y.erase(it);
        }
    }
}

// Row-reduced basis of a subspace of a sparse vector space over Q(q).
template <class Key>
class LinearSpan {
public:
    bool add(SparseVector<Key> v) {
        reduce(v);
        if (v.empty()) return false;
        Key pivot = v.begin()->first;
        CycScalar inv = v.begin()->second.inv();
        for (auto& [k, c] : v) c *= inv;
        for (auto& [p, row] : rows_) {
            auto it = row.find(pivot);
            if (it != row.end()) {
                CycScalar f = -it->second;
                axpy(row, f, v);
            }
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }
    bool contains(SparseVector<Key> v) const {
        reduce(v);
        return v.empty();
    }
    void reduce(SparseVector<Key>& v) const {
        for (const auto& [p, row] : rows_) {
            auto it = v.find(p);
            if (it == v.end()) continue;
            CycScalar f = -it->second;
            axpy(v, f, row);
        }
    }
    size_t rank() const { return rows_.size(); }

private:
    std::map<Key, SparseVector<Key>> rows_;
};

// Solves sum_i x_i * columns[i] = rhs; nullopt when rhs is outside the column span.
// Free variables are set to zero.
template <class Key>
std::optional<std::vector<CycScalar>> solve_linear(const std::vector<SparseVector<Key>>& columns,
                                                   const SparseVector<Key>& rhs) {
    size_t n = columns.size();
    // Augmented vectors carry the combination that produced them.
    struct Row {
        SparseVector<Key> v;
        std::vector<CycScalar> combo;
    };
    std::map<Key, Row> basis;
    auto reduce = [&](Row& r) {
        for (const auto& [p, b] : basis) {
            auto it = r.v.find(p);
            if (it == r.v.end()) continue;
            CycScalar f = -it->second;
            axpy(r.v, f, b.v);
            for (size_t i = 0; i < n; ++i) r.combo[i] += f * b.combo[i];
        }
    };
    for (size_t i = 0; i < n; ++i) {
        Row r{columns[i], std::vector<CycScalar>(n)};
        r.combo[i] = 1;
        reduce(r);
        if (r.v.empty()) continue;
        Key pivot = r.v.begin()->first;
        CycScalar inv = r.v.begin()->second.inv();
        for (auto& [k, c] : r.v) c *= inv;
        for (auto& c : r.combo) c *= inv;
        for (auto& [p, b] : basis) {
            auto it = b.v.find(pivot);
            if (it == b.v.end()) continue;
            CycScalar f = -it->second;
            axpy(b.v, f, r.v);
            for (size_t j = 0; j < n; ++j) b.combo[j] += f * r.combo[j];
        }
        basis.emplace(pivot, std::move(r));
    }
    // rhs = sum over pivots of rhs[pivot] * basis row, when the residual vanishes.
    Row target{rhs, std::vector<CycScalar>(n)};
    std::vector<CycScalar> x(n);
    for (const auto& [p, b] : basis) {
        auto it = target.v.find(p);
        if (it == target.v.end()) continue;
        CycScalar f = it->second;
        axpy(target.v, -f, b.v);
        for (size_t j = 0; j < n; ++j) x[j] += f * b.combo[j];
    }
    if (!target.v.empty()) return std::nullopt;
    return x;
}

}  // namespace z3qg
