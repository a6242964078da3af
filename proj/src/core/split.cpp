#include "mel/core/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mel/core/errors.hpp"
#include "mel/core/rng.hpp"

namespace mel {

const char* condition_name(Condition c) { return c == Condition::injured ? "injured" : "normal"; }

Condition condition_from_name(const std::string& name) {
    if (name == "injured") return Condition::injured;
    if (name == "normal") return Condition::normal;
    throw MelError("unknown condition: " + name);
}

namespace {

constexpr int kNumSplits = 3;

// Largest-remainder apportionment of n over the ratio; remainder ties go to
// the smaller split index.
std::array<int, kNumSplits> apportion(int n, const std::array<int, kNumSplits>& ratio) {
    const double total = static_cast<double>(ratio[0] + ratio[1] + ratio[2]);
    std::array<int, kNumSplits> base{};
    std::array<double, kNumSplits> frac{};
    int assigned = 0;
    for (int s = 0; s < kNumSplits; ++s) {
        const double q = n * ratio[s] / total;
        base[s] = static_cast<int>(std::floor(q));
        frac[s] = q - base[s];
        assigned += base[s];
    }
    int rem = n - assigned;
    std::array<int, kNumSplits> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return frac[a] > frac[b]; });
    for (int i = 0; rem > 0; i = (i + 1) % kNumSplits) {
        base[order[i]] += 1;
        --rem;
    }
    return base;
}

}  // namespace

DatasetSplit split_dataset(const std::vector<WsiRecord>& records, SplitRatio ratio, uint64_t seed) {
    if (ratio.train < 0 || ratio.val < 0 || ratio.test < 0 ||
        ratio.train + ratio.val + ratio.test <= 0)
        throw MelError("split_dataset: ratio parts must be non-negative with positive sum");

    // Dedupe by wsi_id; conflicting conditions for one id are an input error.
    std::map<std::string, Condition> by_id;
    for (const auto& r : records) {
        auto it = by_id.find(r.wsi_id);
        if (it == by_id.end()) {
            by_id.emplace(r.wsi_id, r.condition);
        } else if (it->second != r.condition) {
            throw MelError("split_dataset: wsi '" + r.wsi_id + "' has conflicting conditions");
        }
    }

    const std::array<int, kNumSplits> parts{ratio.train, ratio.val, ratio.test};
    int nonzero_parts = 0;
    for (int p : parts) nonzero_parts += (p > 0);
    const int n = static_cast<int>(by_id.size());
    if (n < nonzero_parts)
        throw InsufficientData("split_dataset: " + std::to_string(n) + " WSIs for " +
                               std::to_string(nonzero_parts) + " split parts");

    std::array<int, kNumSplits> caps = apportion(n, parts);

    // Group sorted ids per condition, enum order.
    std::array<std::vector<std::string>, 2> groups;
    for (const auto& [id, cond] : by_id) groups[static_cast<int>(cond)].push_back(id);

    Rng rng(mix64(seed));
    const double total_ratio = static_cast<double>(parts[0] + parts[1] + parts[2]);
    std::array<std::vector<std::string>, kNumSplits> out;

    for (auto& ids : groups) {
        std::sort(ids.begin(), ids.end());
        rng.shuffle(ids);
        const int nc = static_cast<int>(ids.size());
        if (nc == 0) continue;

        std::array<double, kNumSplits> quota{};
        std::array<int, kNumSplits> alloc{};
        int assigned = 0;
        for (int s = 0; s < kNumSplits; ++s) {
            quota[s] = nc * parts[s] / total_ratio;
            alloc[s] = std::min(static_cast<int>(std::floor(quota[s])), caps[s]);
            assigned += alloc[s];
        }
        // Spill the remainder into splits with free capacity, preferring the
        // largest fractional quota (split order on ties).
        std::array<int, kNumSplits> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const double fa = quota[a] - std::floor(quota[a]);
            const double fb = quota[b] - std::floor(quota[b]);
            return fa > fb;
        });
        int rem = nc - assigned;
        while (rem > 0) {
            bool placed = false;
            for (int i = 0; i < kNumSplits && rem > 0; ++i) {
                const int s = order[i];
                if (caps[s] - alloc[s] > 0) {
                    alloc[s] += 1;
                    --rem;
                    placed = true;
                }
            }
            if (!placed) break;  // unreachable: total capacity equals n
        }

        int cursor = 0;
        for (int s = 0; s < kNumSplits; ++s) {
            for (int i = 0; i < alloc[s]; ++i) out[s].push_back(ids[cursor++]);
            caps[s] -= alloc[s];
        }
    }

    DatasetSplit split;
    split.train = std::move(out[0]);
    split.val = std::move(out[1]);
    split.test = std::move(out[2]);
    return split;
}

}  // namespace mel
