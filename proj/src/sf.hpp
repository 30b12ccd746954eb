#ifndef ACSF_SF_HPP
#define ACSF_SF_HPP

#include <string>
#include <vector>

namespace acsf {

enum class SfClass { exact, single_run, multi_run };

// The vector (h_w(0), ..., h_w(n)) for one automaton class.
struct StructureFunction {
    SfClass cls = SfClass::exact;
    std::vector<int> values; // index m = 0..n

    int n() const { return static_cast<int>(values.size()) - 1; }
    int at(int m) const { return values[static_cast<size_t>(m)]; }
};

inline const char* to_string(SfClass c) {
    switch (c) {
        case SfClass::exact: return "exact";
        case SfClass::single_run: return "single-run";
        case SfClass::multi_run: return "multi-run";
    }
    return "?";
}

} // namespace acsf

#endif
