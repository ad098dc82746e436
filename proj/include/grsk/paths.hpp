#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace grsk {

/// Vertex-set enumeration of directed nearest-neighbour lattice paths, shared
/// by the polymer (sum/product) and last-passage (max/sum) oracles.  A path is
/// stored as a bitmask over cells; cell ids are supplied by the caller so the
/// rectangular and triangular geometries can share the machinery.
struct PathEnumerator {
    /// cell_id(i,j) returns a bit index in [0,64) or -1 if the cell is outside
    /// the allowed region.
    std::function<int(int, int)> cell_id;

    /// All monotone paths (steps down or right) from (si,sj) to (ti,tj) that
    /// stay inside the allowed region.  Returns vertex bitmasks.
    std::vector<uint64_t> paths(int si, int sj, int ti, int tj) const {
        std::vector<uint64_t> out;
        int id = cell_id(si, sj);
        if (id < 0) return out;
        walk(si, sj, ti, tj, uint64_t(1) << id, out);
        return out;
    }

    /// All r-tuples of pairwise vertex-disjoint paths, starts[k] -> ends[k].
    /// Returns the union masks of the tuples.
    std::vector<uint64_t> disjoint_tuples(const std::vector<std::pair<int, int>>& starts,
                                          const std::vector<std::pair<int, int>>& ends) const {
        if (starts.size() != ends.size()) throw std::invalid_argument("paths: start/end mismatch");
        std::vector<std::vector<uint64_t>> per_pair;
        per_pair.reserve(starts.size());
        for (size_t k = 0; k < starts.size(); ++k)
            per_pair.push_back(paths(starts[k].first, starts[k].second,
                                     ends[k].first, ends[k].second));
        std::vector<uint64_t> out;
        combine(per_pair, 0, 0, out);
        return out;
    }

private:
    void walk(int i, int j, int ti, int tj, uint64_t mask, std::vector<uint64_t>& out) const {
        if (i == ti && j == tj) {
            out.push_back(mask);
            return;
        }
        if (i > ti || j > tj) return;
        if (i < ti) {
            int id = cell_id(i + 1, j);
            if (id >= 0) walk(i + 1, j, ti, tj, mask | (uint64_t(1) << id), out);
        }
        if (j < tj) {
            int id = cell_id(i, j + 1);
            if (id >= 0) walk(i, j + 1, ti, tj, mask | (uint64_t(1) << id), out);
        }
    }

    static void combine(const std::vector<std::vector<uint64_t>>& per_pair, size_t k,
                        uint64_t used, std::vector<uint64_t>& out) {
        if (k == per_pair.size()) {
            out.push_back(used);
            return;
        }
        for (uint64_t mask : per_pair[k])
            if ((mask & used) == 0) combine(per_pair, k + 1, used | mask, out);
    }
};

}  // namespace grsk
