#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ybx {

// Verdict of one property check. On failure, witness_indices pins down the
// failing case so the caller can re-evaluate it: basis indices for
// multilinear identities, grid coordinates followed by the basis index of y
// for the degree-3 identity check, a parameter tuple for scans. The indices
// are the machine-readable part; witness_detail is for humans.
struct CheckReport {
    std::string property;
    bool holds = false;
    std::vector<std::size_t> witness_indices;
    std::string witness_detail;

    static CheckReport pass(std::string name) {
        return CheckReport{std::move(name), true, {}, {}};
    }

    static CheckReport fail(std::string name, std::vector<std::size_t> indices,
                            std::string detail) {
        return CheckReport{std::move(name), false, std::move(indices), std::move(detail)};
    }
};

}  // namespace ybx
