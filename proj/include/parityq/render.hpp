#pragma once

#include <string>

#include "parityq/cluster.hpp"

namespace parityq {

// ASCII cluster picture: '*' is the zero root, 'o' a root of f, parentheses
// around the twin with its relative depth as subscript, the whole picture
// bracketed with the outer depth: e.g. [(* o)_1 o o]_0
inline std::string render_cluster(const ClusterPicture& cp) {
    if (cp.shape == ClusterPicture::Shape::Unsupported)
        return "unsupported at p=" + cp.p.get_str() + ": " + cp.reason;
    std::string out = "[";
    bool in_twin = false;
    for (std::size_t k = 0; k < cp.marks.size(); ++k) {
        const auto& [tok, twin] = cp.marks[k];
        if (k > 0) out += " ";
        if (twin && !in_twin) {
            out += "(";
            in_twin = true;
        }
        out += tok;
        bool next_twin = (k + 1 < cp.marks.size()) && cp.marks[k + 1].second;
        if (in_twin && !next_twin) {
            out += ")_" + cp.twin->depth.str();
            in_twin = false;
        }
    }
    out += "]_" + cp.top_depth.str();
    return out;
}

// Ordered marks of the real roots of x f(x), smallest to largest.
inline std::string render_real(const RealConfiguration& rc) {
    std::string out;
    auto put = [&](char c) {
        if (!out.empty()) out += " ";
        out += c;
    };
    int below = rc.real_roots - rc.positive_roots;
    for (int i = 0; i < below; ++i) put('o');
    put('*');
    for (int i = 0; i < rc.positive_roots; ++i) put('o');
    return out;
}

}  // namespace parityq
