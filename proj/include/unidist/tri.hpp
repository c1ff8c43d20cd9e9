#pragma once

#include <string>

namespace unidist {

// Three-valued verdict for one-directional facts. And/Or are Kleene.
enum class Tri { No = 0, Unknown = 1, Yes = 2 };

inline Tri tri_and(Tri a, Tri b) { return a < b ? a : b; }
inline Tri tri_or(Tri a, Tri b) { return a > b ? a : b; }
inline Tri tri_not(Tri a) {
    if (a == Tri::Yes) return Tri::No;
    if (a == Tri::No) return Tri::Yes;
    return Tri::Unknown;
}
inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }

inline const char* tri_str(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

} // namespace unidist
