#pragma once
// Independent linear-algebra oracle: spans of free-algebra elements over Q(q),
// built by plain Gaussian elimination on word-indexed vectors.

#include "z3qg/algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using z3qg::CycScalar;
using z3qg::Letter;
using Word = std::vector<Letter>;
using Vec = std::map<Word, CycScalar>;

inline void axpy(Vec& y, const CycScalar& a, const Vec& x) {
    for (const auto& [w, c] : x) {
        auto& slot = y[w];
        slot += a * c;
        if (slot.is_zero()) y.erase(w);
    }
}

class Span {
public:
    // Returns true when v was independent of the current span.
    bool add(Vec v) {
        reduce(v);
        if (v.empty()) return false;
        Word pivot = v.begin()->first;
        CycScalar inv = v.begin()->second.inv();
        for (auto& [w, c] : v) c *= inv;
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
    bool contains(Vec v) const {
        reduce(v);
        return v.empty();
    }
    size_t rank() const { return rows_.size(); }

private:
    void reduce(Vec& v) const {
        for (const auto& [p, row] : rows_) {
            auto it = v.find(p);
            if (it == v.end()) continue;
            CycScalar f = -it->second;
            axpy(v, f, row);
        }
    }
    std::map<Word, Vec> rows_;
};

inline Vec to_vec(const z3qg::Poly& p) {
    Vec v;
    for (const auto& [m, c] : p.terms()) axpy(v, c, Vec{{m.letters(), CycScalar(1)}});
    return v;
}

inline std::vector<Word> all_words(int ngens, int len) {
    std::vector<Word> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (int g = 0; g < ngens; ++g) {
                Word x = w;
                x.push_back(Letter{g, 1});
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

// Span of u * r * v over all words u, v such that the result has the given degree.
// Relations must be homogeneous in word length.
inline Span ideal_span(const std::vector<z3qg::Poly>& relations, int ngens, int degree) {
    Span s;
    for (const z3qg::Poly& r : relations) {
        Vec rv = to_vec(r);
        if (rv.empty()) continue;
        int rl = static_cast<int>(rv.begin()->first.size());
        if (rl > degree) continue;
        for (int lu = 0; lu + rl <= degree; ++lu) {
            for (const Word& u : all_words(ngens, lu))
                for (const Word& v : all_words(ngens, degree - rl - lu)) {
                    Vec x;
                    for (const auto& [w, c] : rv) {
                        Word full = u;
                        full.insert(full.end(), w.begin(), w.end());
                        full.insert(full.end(), v.begin(), v.end());
                        axpy(x, c, Vec{{full, CycScalar(1)}});
                    }
                    s.add(std::move(x));
                }
        }
    }
    return s;
}

inline CycScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    return CycScalar(d(rng), d(rng));
}

// Reduced random combination of up to `terms` words of length <= max_len.
inline z3qg::Poly random_element(const z3qg::Presentation& p, std::mt19937& rng, int max_len, int terms = 3) {
    int n = static_cast<int>(p.generators().size());
    std::uniform_int_distribution<int> len(0, max_len), gen(0, n - 1), cnt(1, terms);
    z3qg::Poly out;
    for (int t = cnt(rng); t > 0; --t) {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(Letter{gen(rng), 1});
        out += p.reduce_word(w) * random_scalar(rng);
    }
    return out;
}

}  // namespace oracle
