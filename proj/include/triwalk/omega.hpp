#pragma once

#include <cstddef>
#include <variant>

#include "triwalk/lattice.hpp"
#include "triwalk/motzkin.hpp"

namespace triwalk {

/// Omega_{n,k} sends a forward path from O + k s_1 either to a meander from
/// height k or to a forward path from O + (k-1) s_1.
using OmegaImage = std::variant<MotzkinWord, LatticePath>;

struct OmegaStats {
    std::size_t calls = 0;
};

/// O + k s_1 in T_L.
LatticePoint omega_start(int L, int k);

/// Throws HeightOutOfRange unless 0 <= k <= floor(L/2); throws NotInImage when
/// p is not a valid forward path from O + k s_1.
OmegaImage omega(int L, int k, const LatticePath& p, OmegaStats* stats = nullptr);

/// Throws NotInImage when img is not in M_n(k) u G_n(k-1).
LatticePath omega_inverse(int L, int k, const OmegaImage& img, OmegaStats* stats = nullptr);

/// Omega_{n,0} unwrapped: forward paths from O to amplitude-<=L Motzkin paths.
MotzkinWord forward_to_motzkin_exp(int L, const LatticePath& p, OmegaStats* stats = nullptr);
LatticePath motzkin_to_forward_exp(int L, const MotzkinWord& m, OmegaStats* stats = nullptr);

}  // namespace triwalk
