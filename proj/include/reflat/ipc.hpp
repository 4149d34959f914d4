#pragma once

#include <optional>

#include "reflat/polytope.hpp"

namespace reflat {

/// conv(P* ∩ Z^d) for an IP polytope P with interior point 0. The result may
/// be lower-dimensional (down to the single point 0). Throws NotIP.
Polytope tilde(const Polytope &P);

/// tilde(P) is full-dimensional with 0 in its interior. Since 0 is the only
/// interior lattice point of P*, that makes tilde(P) an IP polytope.
bool is_ip_confined(const Polytope &P);

/// tilde(tilde(P)) ⊆ P. Throws NotIPConfined.
Polytope ipc_closure(const Polytope &P);

struct IpcReport {
    Polytope input;
    Polytope tilde;
    std::optional<Polytope> closure;
    bool ip_confined = false;
    bool ipc_closed = false;
};

IpcReport ipc_report(const Polytope &P);

} // namespace reflat
