#pragma once

// Minimal free resolutions.  Each stage is a free module on the head basis
// of the previous kernel, so differentials land in the radical and the
// generator counts of F_s in internal degree t equal dim Ext^{s,t}.

#include <vector>

#include "a1mod/free.hpp"

namespace a1mod {

struct ResolutionStage {
    FreeModule free;  // F_s
    Morphism d;       // F_s -> F_{s-1}; for s = 0 the augmentation F_0 -> target
};

struct Resolution {
    A1Module target;
    std::vector<ResolutionStage> stages;

    const FreeModule& free_at(int s) const { return stages[static_cast<std::size_t>(s)].free; }
    const Morphism& d_at(int s) const { return stages[static_cast<std::size_t>(s)].d; }
    int max_stage() const { return static_cast<int>(stages.size()) - 1; }
};

// Resolve `m` through homological degree s_max.
inline Resolution minimal_resolution(const A1Module& m, int s_max) {
    if (m.window) throw std::invalid_argument("minimal_resolution: finite target required");
    Resolution res;
    res.target = m;
    A1Module cur = m;
    Morphism into;  // kernel -> F_{s-1}
    for (int s = 0; s <= s_max; ++s) {
        if (cur.is_zero()) break;
        CoverResult cov = projective_cover(cur);
        ResolutionStage stage;
        stage.free = cov.cover;
        stage.d = (s == 0) ? cov.onto : compose(into, cov.onto);
        SubmoduleResult ker = kernel_module(cov.onto);
        into = ker.inclusion;
        cur = ker.module;
        res.stages.push_back(std::move(stage));
    }
    return res;
}

// d . d = 0 and minimality (every differential entry lies in the
// augmentation ideal, i.e. images of generators have no head component).
inline void check_resolution(const Resolution& res) {
    for (int s = 1; s <= res.max_stage(); ++s) {
        if (s >= 2 && !is_zero(compose(res.d_at(s - 1), res.d_at(s))))
            throw std::logic_error("resolution: d . d != 0 at stage " + std::to_string(s));
        // minimality: composing with the head projection of F_{s-1} kills d
        const FreeModule& prev = res.free_at(s - 1);
        const Morphism& d = res.d_at(s);
        for (int g = 0; g < static_cast<int>(res.free_at(s).gen_degrees.size()); ++g) {
            int dg = res.free_at(s).gen_degrees[static_cast<std::size_t>(g)];
            int col = res.free_at(s).column(g, 0);
            gf2::BitVec v(static_cast<std::size_t>(res.free_at(s).module.dim(dg)));
            v.set(static_cast<std::size_t>(col));
            gf2::BitVec img = d.map_at(dg).apply(v);
            // head components of F_{s-1} in degree dg are the columns (h, 1)
            for (int h = 0; h < static_cast<int>(prev.gen_degrees.size()); ++h) {
                if (prev.gen_degrees[static_cast<std::size_t>(h)] != dg) continue;
                if (img.get(static_cast<std::size_t>(prev.column(h, 0))))
                    throw std::logic_error("resolution: non-minimal differential at stage " +
                                           std::to_string(s));
            }
        }
    }
}

// Generator degrees of F_s, i.e. the multiset {t : dim Ext^{s,t}(F, target)}
// when the target is F.
inline std::vector<int> generator_degrees(const Resolution& res, int s) {
    if (s > res.max_stage()) return {};
    return res.free_at(s).gen_degrees;
}

}  // namespace a1mod
