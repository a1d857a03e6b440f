#ifndef OREKIT_SYMBOL_HPP
#define OREKIT_SYMBOL_HPP

#include <array>
#include <cstdint>

namespace orekit {

inline constexpr int kMaxVars = 12;

using MultiIndex = std::array<std::uint8_t, kMaxVars>;

// Packed symbol key. Bits 62-63 hold the kind, bits 48-61 the index within
// that kind, and the low 48 bits the derivative multi-index (one nibble per
// variable, variable 0 in the most significant nibble). Smaller keys are more
// significant in the lexicographic order used for polynomials.
using Sym = std::uint64_t;

enum class SymKind : unsigned { variable = 0, param = 1, function = 2 };

namespace sym {

inline constexpr int kNibbleShift(int i) { return 4 * (kMaxVars - 1 - i); }

inline constexpr Sym make(SymKind k, unsigned index) {
    return (static_cast<Sym>(k) << 62) | (static_cast<Sym>(index & 0x3fffu) << 48);
}

inline constexpr SymKind kind(Sym s) { return static_cast<SymKind>(s >> 62); }
inline constexpr unsigned index(Sym s) { return static_cast<unsigned>((s >> 48) & 0x3fffu); }
inline constexpr Sym base(Sym s) { return s & ~((Sym(1) << 48) - 1); }

inline constexpr int deriv(Sym s, int i) {
    return static_cast<int>((s >> kNibbleShift(i)) & 0xfu);
}

inline MultiIndex derivs(Sym s) {
    MultiIndex mu{};
    for (int i = 0; i < kMaxVars; ++i) mu[i] = static_cast<std::uint8_t>(deriv(s, i));
    return mu;
}

// Derivative of a function symbol with respect to variable i.
Sym derived(Sym s, int i);

}  // namespace sym
}  // namespace orekit

#endif
