#pragma once

#include <stdexcept>
#include <string>

namespace orbita {

/// Base class for all domain/numerical errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Direction (anti)parallel to -e3: the Cartan chart has no value there.
class DegenerateDirection : public Error { using Error::Error; };

/// Angular momentum sits at the excluded antipode of the chosen chart sign.
class AntipodalAngularMomentum : public Error { using Error::Error; };

/// Reduced bracket requested at L3 = 0 where the 1/L3 terms blow up.
class ZeroAngularMomentum : public Error { using Error::Error; };

/// Appendix coefficient tables requested where a kernel denominator vanishes.
class DivergentKernel : public Error { using Error::Error; };

/// Chart point violates one of the domain inequalities (message names it).
class OutOfDomain : public Error { using Error::Error; };

/// State fails the Casimir residual test for the requested orbit.
class OffOrbit : public Error { using Error::Error; };

/// R = 0 states (S ellipsoids) carry no unique chart angle pair.
class ZeroR : public Error { using Error::Error; };

/// (L,Q) outside the projected classical region D.
class OutsideProjection : public Error { using Error::Error; };

/// x outside the oscillation interval of the action integrals.
class OutsideClassicalRegion : public Error { using Error::Error; };

/// Elliptic integral parameter out of admissible range.
class ParameterOutOfRange : public Error { using Error::Error; };

/// Characteristic of the third-kind integral hit its pole.
class CharacteristicPole : public Error { using Error::Error; };

/// Action-angle map evaluated on a band/turning boundary where it degenerates.
class BoundaryState : public Error { using Error::Error; };

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureFailure : public Error { using Error::Error; };

/// Quantization requested for an (orbit, L) with zero multiplicity.
class NoStates : public Error { using Error::Error; };

/// Bisection bracket for a spectrum root could not be established.
class RootBracketFailure : public Error { using Error::Error; };

/// Angular momentum outside [0, lambda+mu].
class LOutOfRange : public Error { using Error::Error; };

/// Two or more orbit weights coincide.
class DegenerateOrbit : public Error { using Error::Error; };

/// A squared body-frame momentum came out below -tolerance.
class NegativeSquare : public Error { using Error::Error; };

} // namespace orbita
