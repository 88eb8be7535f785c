#include "inertia/symbolic.hpp"

#include <algorithm>

namespace inertia {

// The pattern is structurally symmetric, so A's rows double as the columns of
// A viewed in compressed-column form; both traversals below exploit this.

ColEtree col_etree(const CsrMatrix& a) {
    const int n = a.n;
    std::vector<int> parent(n, -1);
    std::vector<int> ancestor(n, -1);
    std::vector<int> prev(n, -1);  // previous column seen in each row's path
    for (int k = 0; k < n; ++k) {
        for (int r : a.row_cols(k)) {
            int i = prev[r];
            while (i != -1 && i < k) {
                int inext = ancestor[i];
                ancestor[i] = k;
                if (inext == -1) parent[i] = k;
                i = inext;
            }
            prev[r] = k;
        }
    }
    return ColEtree{std::move(parent)};
}

std::vector<int> etree_postorder(const ColEtree& t) {
    const int n = static_cast<int>(t.parent.size());
    std::vector<int> head(n, -1), next(n, -1);
    for (int j = n - 1; j >= 0; --j) {
        if (t.parent[j] == -1) continue;
        next[j] = head[t.parent[j]];
        head[t.parent[j]] = j;
    }
    std::vector<int> post;
    post.reserve(n);
    std::vector<int> stack;
    for (int j = 0; j < n; ++j) {
        if (t.parent[j] != -1) continue;  // roots start a DFS
        stack.push_back(j);
        while (!stack.empty()) {
            int p = stack.back();
            int child = head[p];
            if (child == -1) {
                stack.pop_back();
                post.push_back(p);
            } else {
                head[p] = next[child];
                stack.push_back(child);
            }
        }
    }
    return post;
}

namespace {

// Skeleton leaf test (Gilbert-Ng-Peyton). Returns the least common ancestor
// of j and the previous leaf of i's row subtree; jleaf is 0 when (i,j) is not
// a skeleton entry, 1 for the first leaf of the subtree, 2 for later leaves.
int skeleton_leaf(int i, int j, const std::vector<int>& first, std::vector<int>& maxfirst,
                  std::vector<int>& prevleaf, std::vector<int>& ancestor, int& jleaf) {
    jleaf = 0;
    if (i <= j || first[j] <= maxfirst[i]) return -1;
    maxfirst[i] = first[j];
    int jprev = prevleaf[i];
    prevleaf[i] = j;
    if (jprev == -1) {
        jleaf = 1;
        return i;
    }
    jleaf = 2;
    int q = jprev;
    while (q != ancestor[q]) q = ancestor[q];
    for (int s = jprev; s != q;) {
        int sparent = ancestor[s];
        ancestor[s] = q;
        s = sparent;
    }
    return q;
}

}  // namespace

RowCounts r_row_counts(const CsrMatrix& a, const ColEtree& t) {
    const int n = a.n;
    const std::vector<int> post = etree_postorder(t);
    std::vector<int> first(n, -1), maxfirst(n, -1), prevleaf(n, -1), ancestor(n, -1);
    std::vector<int> counts(n, 0);

    for (int k = 0; k < n; ++k) {
        int j = post[k];
        counts[j] = (first[j] == -1) ? 1 : 0;  // delta: 1 iff j is a subtree leaf
        for (; j != -1 && first[j] == -1; j = t.parent[j]) first[j] = k;
    }

    // Each row of A is activated at its leftmost column in postorder.
    std::vector<int> postinv(n);
    for (int k = 0; k < n; ++k) postinv[post[k]] = k;
    std::vector<int> head(n + 1, -1), next(n, -1);
    for (int i = 0; i < n; ++i) {
        int k = n;
        for (int c : a.row_cols(i)) k = std::min(k, postinv[c]);
        next[i] = head[k];
        head[k] = i;
    }

    for (int i = 0; i < n; ++i) ancestor[i] = i;
    for (int k = 0; k < n; ++k) {
        int j = post[k];
        if (t.parent[j] != -1) --counts[t.parent[j]];
        for (int row = head[k]; row != -1; row = next[row]) {
            for (int i : a.row_cols(row)) {
                int jleaf = 0;
                int q = skeleton_leaf(i, j, first, maxfirst, prevleaf, ancestor, jleaf);
                if (jleaf >= 1) ++counts[j];
                if (jleaf == 2) --counts[q];
            }
        }
        if (t.parent[j] != -1) ancestor[j] = t.parent[j];
    }
    for (int k = 0; k < n; ++k) {
        int j = post[k];
        if (t.parent[j] != -1) counts[t.parent[j]] += counts[j];
    }
    return RowCounts{std::move(counts)};
}

std::vector<int> allocate_capacities(const CsrMatrix& a, const RowCounts& counts) {
    std::vector<int> cap(a.n);
    for (int i = 0; i < a.n; ++i)
        cap[i] = std::max(counts.counts[i], static_cast<int>(a.row_size(i)));
    return cap;
}

}  // namespace inertia
