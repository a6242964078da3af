#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mel {

enum class Condition { injured, normal };

const char* condition_name(Condition c);
Condition condition_from_name(const std::string& name);

struct WsiRecord {
    std::string wsi_id;
    Condition condition = Condition::normal;
};

struct SplitRatio {
    int train = 6;
    int val = 1;
    int test = 3;
};

// Disjoint, exhaustive partition of wsi ids.
struct DatasetSplit {
    std::vector<std::string> train;
    std::vector<std::string> val;
    std::vector<std::string> test;
};

// Deterministic, condition-stratified split at the WSI level.
//
// Algorithm (fixed, so tests can replay it):
//   1. dedupe records by wsi_id (a conflicting duplicate condition is an
//      error);
//   2. global split sizes = largest-remainder apportionment of n over the
//      ratio, remainder ties broken by split order (train, val, test);
//   3. per condition, in enum order (injured then normal): sort ids,
//      Fisher-Yates shuffle with a single mt19937_64 stream seeded by
//      `seed`, then apportion that condition's ids over the splits by
//      largest remainder, capped by the remaining global capacity; any
//      shortfall spills to splits with free capacity in order of
//      descending fractional quota (split order on ties).
//
// Throws InsufficientData when there are fewer distinct WSIs than nonzero
// ratio parts.
DatasetSplit split_dataset(const std::vector<WsiRecord>& records, SplitRatio ratio, uint64_t seed);

}  // namespace mel
