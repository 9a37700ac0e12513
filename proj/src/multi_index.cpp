#include "momentcert/multi_index.hpp"

#include <algorithm>

namespace momentcert {

namespace {

void enumerate(int n, int pos, int remaining, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur[pos] = k;
        enumerate(n, pos + 1, remaining - k, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomial_basis(int n, int max_degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n);
    enumerate(n, 0, max_degree, cur, out);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<MultiIndex> axis_basis(int n, int axis, int max_degree) {
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int k = 0; k <= max_degree; ++k) {
        MultiIndex a(n);
        a[axis - 1] = k;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace momentcert
