#include "wreathgen/lr.hpp"

#include <mutex>
#include <tuple>
#include <vector>

namespace wreathgen {

bool is_horizontal_strip(const Partition& lam, const Partition& nu) {
    // at most one cell of nu/lam per column: nu_{i+1} <= lam_i
    for (int i = 0; i < nu.length(); ++i)
        if (nu.part(i + 1) > lam.part(i)) return false;
    return nu.contains(lam);
}

bool is_vertical_strip(const Partition& lam, const Partition& nu) {
    for (int i = 0; i < nu.length(); ++i)
        if (nu.part(i) - lam.part(i) > 1) return false;
    return nu.contains(lam);
}

namespace detail {

// Counts semistandard fillings of nu/lam with content mu whose reverse reading
// word is a lattice word.  Cells are filled in reading order (rows top to
// bottom, right to left within a row), so the lattice condition and row/column
// constraints can be checked as each cell is placed.
Int lr_count_tableaux(const Partition& lam, const Partition& mu, const Partition& nu) {
    const int rows = nu.length();
    const int m = mu.length();
    if (m == 0) return lam == nu ? 1 : 0;
    if (rows == 0) return 0;

    std::vector<int> count(static_cast<size_t>(m), 0);  // letters placed so far
    // grid[r][c] holds the entry (1-based letter) at cell (r,c), 0 if unfilled.
    std::vector<std::vector<int>> grid(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) grid[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);

    Int total = 0;
    auto fill = [&](auto&& self, int r, int c) -> void {
        // advance to the next skew cell in reading order
        while (r < rows && c < lam.part(r)) {
            ++r;
            c = r < rows ? nu.part(r) - 1 : 0;
        }
        if (r >= rows) {
            for (int v = 0; v < m; ++v)
                if (count[static_cast<size_t>(v)] != mu.part(v)) return;  // content not exhausted
            total += 1;
            return;
        }
        const int above = (r > 0 && c < nu.part(r - 1)) ? grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] : 0;
        const int right = (c + 1 < nu.part(r)) ? grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] : m + 1;
        int next_r = r, next_c = c - 1;
        if (next_c < 0 || next_c < lam.part(r)) {
            next_r = r + 1;
            next_c = next_r < rows ? nu.part(next_r) - 1 : 0;
        }
        for (int v = 1; v <= m; ++v) {
            if (v <= above) continue;       // column strict
            if (v > right) break;           // row weak, scanning right-to-left
            if (count[static_cast<size_t>(v - 1)] >= mu.part(v - 1)) continue;  // content
            if (v > 1 && count[static_cast<size_t>(v - 1)] >= count[static_cast<size_t>(v - 2)]) continue;  // lattice
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++count[static_cast<size_t>(v - 1)];
            self(self, next_r, next_c);
            --count[static_cast<size_t>(v - 1)];
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    fill(fill, 0, rows > 0 ? nu.part(0) - 1 : 0);
    return total;
}

}  // namespace detail

namespace {

using Key = std::tuple<Partition, Partition, Partition>;
std::map<Key, Int> g_cache;
std::mutex g_cache_mutex;

}  // namespace

Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lam) || !nu.contains(mu)) return 0;

    // Pieri fast paths: one-row mu wants a horizontal strip, one-column a
    // vertical strip.  The generic enumeration cross-checks these in tests.
    if (mu.length() <= 1) return is_horizontal_strip(lam, nu) ? 1 : 0;
    if (mu.part(0) == 1) return is_vertical_strip(lam, nu) ? 1 : 0;

    Key key(lam, mu, nu);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    Int value = detail::lr_count_tableaux(lam, mu, nu);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.emplace(std::move(key), std::move(value)).first->second;
}

std::map<Partition, Int> lr_expand(const Partition& lam, const Partition& mu) {
    std::map<Partition, Int> out;
    for (const auto& nu : partitions_of(lam.size() + mu.size())) {
        Int c = lr_coefficient(lam, mu, nu);
        if (c != 0) out.emplace(nu, std::move(c));
    }
    return out;
}

}  // namespace wreathgen
