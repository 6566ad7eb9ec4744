"""Exception types raised across the package."""


class RigidityError(Exception):
    """Base class for every error raised by torus_rigidity."""


class NotUnimodular(RigidityError):
    pass


class DimensionMismatch(RigidityError):
    pass


class NonCommuting(RigidityError):
    def __init__(self, i: int, j: int, message: str | None = None):
        self.pair = (i, j)
        super().__init__(message or f"generators {i} and {j} do not commute")


class RankMismatch(RigidityError):
    pass


class NotEquivariant(RigidityError):
    pass


class NotSurjective(RigidityError):
    pass


class EmptyF(RigidityError):
    """The finite-orbit character lattice is zero, so no character can be chosen."""


class SeparationFailure(RigidityError):
    def __init__(self, min_gap: float, tol: float, attempts: int):
        self.min_gap = min_gap
        self.tol = tol
        self.attempts = attempts
        super().__init__(
            f"circle values not separated by more than {tol:g} after {attempts} "
            f"attempts (best minimum gap {min_gap:.3g})"
        )


class PreconditionError(RigidityError):
    pass
