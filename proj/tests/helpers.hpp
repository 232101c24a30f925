#pragma once

#include <vector>

#include "dynkin/hvector.hpp"
#include "dynkin/specparse.hpp"

namespace dynkin::test {

inline MarkedPair pair_of(const std::string& spec) { return parse_pair(spec); }

inline TwoSidedWeight tsw(std::vector<long long> x, std::vector<long long> y) {
    return TwoSidedWeight(HVector(std::move(x)), HVector(std::move(y)));
}

inline Weight wt(std::vector<long long> coords) { return Weight(std::move(coords)); }

inline IntMatrix gcm(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Int(rows[i][j]);
    return m;
}

}  // namespace dynkin::test
