"""Exception types raised across the package."""


class GlsmError(Exception):
    """Base class for all package errors."""


class WallCharacter(GlsmError, ValueError):
    """A character with a zero exponent lies on a wall of the chamber fan."""


class UnsupportedChamber(GlsmError, ValueError):
    """Chambers with the a-variable in the subscript are not modeled."""


class ZeroScalarPart(GlsmError, ZeroDivisionError):
    """Inverse requested for a nilpotent element."""


class UnknownSector(GlsmError, ValueError):
    """A class sits on a sector label that has no narrow state-space slot."""


class NotAdjacent(GlsmError, ValueError):
    """Chambers are not related by the requested variable move."""


class ZeroHbar(GlsmError, ValueError):
    """The equivariant parameter was zero."""


class PoleArgument(GlsmError, ValueError):
    """A Gamma function was evaluated at a nonpositive integer."""


class VanishingTerm(GlsmError, ValueError):
    """The residue at this degree is cancelled and the term is absent."""


class OutOfRegion(GlsmError, ValueError):
    """The point lies outside the region where the oracle is defined."""


class ZeroQ(GlsmError, ValueError):
    """A Novikov variable is zero where a logarithm or negative power is needed."""


class BranchAmbiguity(GlsmError, ValueError):
    """A Novikov variable lies on the branch cut of the principal logarithm."""
