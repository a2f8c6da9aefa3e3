#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tgwa/scalar.hpp"

namespace tgwa {

/// Incremental Gaussian elimination over Scalar on sparse vectors indexed by Key.
/// Each stored row remembers which combination of the inserted vectors it is,
/// so membership queries can return coefficients.
template <class Key>
class SparseEchelon {
public:
    using Vec = std::map<Key, Scalar>;

    /// Inserts v; returns true iff v was independent of the vectors inserted so far.
    bool insert(const Vec& v) {
        const size_t id = inserted_++;
        std::vector<Scalar> combo(id + 1);
        combo[id] = Scalar(1);
        Vec r = v;
        reduce(r, combo);
        if (r.empty()) return false;
        const Key pivot = r.begin()->first;
        const Scalar inv = r.begin()->second.inverse();
        for (auto& [k, c] : r) c *= inv;
        for (auto& c : combo) c *= inv;
        rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
        return true;
    }

    /// Coefficients c (one per inserted vector) with v = sum c_l v_l, if v is in the span.
    std::optional<std::vector<Scalar>> express(const Vec& v) const {
        std::vector<Scalar> combo(inserted_);
        Vec r = v;
        reduce(r, combo);
        if (!r.empty()) return std::nullopt;
        for (auto& c : combo) c = -c;
        return combo;
    }

    size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Vec v;
        std::vector<Scalar> combo;
    };

    // r -= sum f * row, tracking combo accordingly (combo entries count negatively).
    void reduce(Vec& r, std::vector<Scalar>& combo) const {
        auto it = r.begin();
        while (it != r.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const Scalar f = it->second;
            const Key key = it->first;
            for (const auto& [k, c] : row->second.v) {
                auto [pos, fresh] = r.try_emplace(k, -(f * c));
                if (!fresh) {
                    pos->second -= f * c;
                    if (pos->second.is_zero()) r.erase(pos);
                }
            }
            if (combo.size() < row->second.combo.size()) combo.resize(row->second.combo.size());
            for (size_t l = 0; l < row->second.combo.size(); ++l)
                if (!row->second.combo[l].is_zero()) combo[l] -= f * row->second.combo[l];
            it = r.upper_bound(key);
        }
    }

    std::map<Key, Row> rows_;
    size_t inserted_ = 0;
};

}  // namespace tgwa
