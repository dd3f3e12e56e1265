#ifndef COAMOEBA_WEDGE_HPP
#define COAMOEBA_WEDGE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coamoeba {

/**
 * Basis monomial e_{a1} ^ ... ^ e_{ak} of an exterior algebra, stored as the
 * strictly ascending index set.  The empty set is the unit, degree equals
 * cardinality.
 */
struct WedgeMonomial {
    std::vector<int> indices;

    int degree() const { return static_cast<int>(indices.size()); }

    std::string name() const
    {
        if (indices.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i)
                s += "^";
            s += "e" + std::to_string(indices[i]);
        }
        return s;
    }

    bool operator==(const WedgeMonomial& o) const { return indices == o.indices; }
    bool operator<(const WedgeMonomial& o) const
    {
        if (indices.size() != o.indices.size())
            return indices.size() < o.indices.size();
        return indices < o.indices;
    }
};

/**
 * Sign of (^a) ^ (^b) relative to the sorted concatenation, or 0 when the
 * index sets overlap.  Both inputs must be strictly ascending.
 */
inline int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b)
{
    int inversions = 0;
    for (int x : b) {
        int above = 0;
        for (int y : a) {
            if (y == x)
                return 0;
            if (y > x)
                ++above;
        }
        inversions += above;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// Wedge product; nullopt encodes zero (overlapping indices).
inline std::optional<std::pair<WedgeMonomial, int>> wedge(const WedgeMonomial& a,
                                                          const WedgeMonomial& b)
{
    int sign = shuffle_sign(a.indices, b.indices);
    if (sign == 0)
        return std::nullopt;
    WedgeMonomial m;
    m.indices.reserve(a.indices.size() + b.indices.size());
    m.indices.insert(m.indices.end(), a.indices.begin(), a.indices.end());
    m.indices.insert(m.indices.end(), b.indices.begin(), b.indices.end());
    std::sort(m.indices.begin(), m.indices.end());
    return std::make_pair(std::move(m), sign);
}

/// All degree-k monomials on indices {1..universe}, lexicographic.
inline std::vector<WedgeMonomial> monomials(int universe, int k)
{
    std::vector<WedgeMonomial> out;
    if (k < 0 || k > universe)
        return out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i)
        pick[i] = i + 1;
    while (true) {
        out.push_back(WedgeMonomial{pick});
        int i = k - 1;
        while (i >= 0 && pick[i] == universe - (k - 1 - i))
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace coamoeba

#endif
