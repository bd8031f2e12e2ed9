#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gcore::detail {

/// Splits a cycle of `cycle_len` positions along the given chords (position
/// pairs i < j, non-adjacent on the cycle). Returns the interior faces as
/// position sequences in boundary order, or nullopt if two chords cross.
inline std::optional<std::vector<std::vector<std::uint32_t>>>
enumerate_faces_positions(std::uint32_t cycle_len,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& chords) {
    std::vector<std::vector<std::uint32_t>> closing(cycle_len);
    for (auto [i, j] : chords) closing[j].push_back(i);
    for (auto& list : closing) std::sort(list.begin(), list.end(), std::greater<>());

    std::vector<std::vector<std::uint32_t>> faces;
    faces.reserve(chords.size() + 1);
    std::vector<std::uint32_t> stack;
    stack.reserve(cycle_len);
    for (std::uint32_t p = 0; p < cycle_len; ++p) {
        for (std::uint32_t q : closing[p]) {
            std::vector<std::uint32_t> face;
            while (!stack.empty() && stack.back() != q) {
                face.push_back(stack.back());
                stack.pop_back();
            }
            if (stack.empty()) return std::nullopt; // crossing chords
            face.push_back(q);
            std::reverse(face.begin(), face.end());
            face.push_back(p);
            faces.push_back(std::move(face));
        }
        stack.push_back(p);
    }
    faces.push_back(std::move(stack));
    return faces;
}

} // namespace gcore::detail
