#include "wreathgen/sn_character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "wreathgen/error.hpp"

namespace wreathgen {

namespace {

// Border strips in beta-number form: removing a strip of length L is
// replacing some beta b by b - L (which must stay distinct), with sign
// (-1)^{number of betas strictly between b-L and b}.
Partition partition_from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    const int l = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = betas[static_cast<size_t>(i)] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Int mn_recurse(const Partition& lam, const Partition& type);

std::map<std::pair<Partition, Partition>, Int> g_cache;
std::mutex g_cache_mutex;

Int mn_recurse(const Partition& lam, const Partition& type) {
    if (type.empty()) return 1;
    std::pair<Partition, Partition> key(lam, type);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }

    const int strip = type.part(0);
    std::vector<int> rest_parts(type.parts().begin() + 1, type.parts().end());
    Partition rest(std::move(rest_parts));

    const int l = lam.length();
    std::vector<int> betas(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) betas[static_cast<size_t>(i)] = lam.part(i) + (l - 1 - i);

    Int total = 0;
    for (int i = 0; i < l; ++i) {
        int b = betas[static_cast<size_t>(i)];
        int target = b - strip;
        if (target < 0) continue;
        bool clash = false;
        int between = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            int bj = betas[static_cast<size_t>(j)];
            if (bj == target) clash = true;
            if (bj > target && bj < b) ++between;
        }
        if (clash) continue;
        std::vector<int> next = betas;
        next[static_cast<size_t>(i)] = target;
        Int sub = mn_recurse(partition_from_betas(std::move(next)), rest);
        total += (between % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.emplace(std::move(key), std::move(total)).first->second;
}

}  // namespace

Int sn_character(const Partition& lam, const Partition& type) {
    if (lam.size() != type.size())
        throw Error("size-mismatch", "shape has size " + std::to_string(lam.size()) +
                                         ", cycle type has size " + std::to_string(type.size()));
    return mn_recurse(lam, type);
}

}  // namespace wreathgen
