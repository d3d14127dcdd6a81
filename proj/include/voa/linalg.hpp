#pragma once

#include <map>

#include "voa/rational.hpp"

namespace voa {

// Incremental row space over Q with map-backed sparse rows. Rows are kept
// with distinct pivot keys and pivot coefficient 1.
template <class Key>
class RowSpace {
  public:
    using Row = std::map<Key, Rational>;

    // Returns true if the vector enlarged the space.
    bool insert(Row v) {
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) {
                Rational lead = v.begin()->second;
                for (auto& [k, c] : v) c /= lead;
                rows_.emplace(v.begin()->first, std::move(v));
                return true;
            }
            Rational f = v.begin()->second;
            for (const auto& [k, c] : it->second) {
                auto jt = v.find(k);
                if (jt == v.end()) {
                    v.emplace(k, -f * c);
                } else {
                    jt->second -= f * c;
                    if (jt->second == 0) v.erase(jt);
                }
            }
        }
        return false;
    }

    bool contains(Row v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) return false;
            Rational f = v.begin()->second;
            for (const auto& [k, c] : it->second) {
                auto jt = v.find(k);
                if (jt == v.end()) {
                    v.emplace(k, -f * c);
                } else {
                    jt->second -= f * c;
                    if (jt->second == 0) v.erase(jt);
                }
            }
        }
        return true;
    }

    size_t rank() const { return rows_.size(); }

  private:
    std::map<Key, Row> rows_;  // pivot -> row
};

// Rank of a dense rational matrix.
inline long matrix_rank(std::vector<QVec> m) {
    long rows = (long)m.size();
    if (rows == 0) return 0;
    long cols = (long)m[0].size();
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        Rational inv = 1 / m[rank][c];
        for (long j = c; j < cols; ++j) m[rank][j] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (long j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace voa
