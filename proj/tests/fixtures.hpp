#pragma once

#include "inqmc/model.hpp"

namespace fixtures {

inline inqmc::InfoState st(const char* bits) { return inqmc::InfoState::from_string(bits); }

/// Three worlds; V(p0) = {w0, w2}, V(p1) = {w0, w1}; Σ(w0) generated by {w2},
/// Σ(w1) by {w0} and {w1, w2}, Σ(w2) by {w0, w1} and {w0, w2}. With
/// `with_p2` a third atom with empty extension is added.
inline inqmc::InformationModel three_world_model(bool with_p2 = false)
{
    inqmc::InformationModel m;
    m.worlds = 3;
    m.atoms = with_p2 ? 3 : 2;
    m.valuation = {st("101"), st("110")};
    if (with_p2) m.valuation.push_back(st("000"));
    m.sigma = std::vector<std::vector<inqmc::InfoState>>{
        {st("001")},
        {st("100"), st("011")},
        {st("110"), st("101")},
    };
    return m;
}

} // namespace fixtures
