"""Exception classes for the exact six-vertex and Segre cubic computations.

Every error keeps the offending inputs as attributes and renders a
multi-line diagnostic message, so that the CLI can print it as is and
tests can inspect the attributes.
"""

from typing import Any, Optional, Sequence


class VertexModelError(Exception):
    """Base exception for all algebraic verification errors."""
    pass


def _fmt(values: Sequence[Any]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


class DimensionMismatchError(VertexModelError):
    """Raised when operand shapes do not fit the requested operation.

    Attributes:
        operation: Name of the operation
        left: Shape (or length) of the first operand
        right: Shape (or length) of the second operand, if any
    """
    def __init__(self, operation: str, left: Any, right: Any = None):
        self.operation = operation
        self.left = left
        self.right = right
        message = f"Dimension mismatch in {operation}: {left}"
        if right is not None:
            message += f" vs {right}"
        super().__init__(message)


class InvalidSlotError(VertexModelError):
    """Raised when a three-space embedding slot is not one of 12, 13, 23."""
    def __init__(self, slot: Any):
        self.slot = slot
        super().__init__(f"Invalid tensor slot {slot!r}. Valid slots are 12, 13 and 23.")


class ZeroVectorError(VertexModelError):
    """Raised when a projective point or weight triple has only zero coordinates."""
    def __init__(self, coords: Sequence[Any]):
        self.coords = tuple(coords)
        super().__init__(
            f"All coordinates of {_fmt(self.coords)} vanish; "
            f"a projective point needs at least one nonzero coordinate."
        )


class RationalParseError(VertexModelError):
    """Raised when a rational literal cannot be parsed.

    Attributes:
        text: The literal as given
        reason: Why it was rejected
    """
    def __init__(self, text: str, reason: str = ""):
        self.text = text
        self.reason = reason
        message = f"Cannot parse rational literal {text!r}"
        if reason:
            message += f"\n   Reason: {reason}"
        message += "\n   Expected: optional sign, integer, optional '/' positive integer (e.g. -5/9, 52)"
        super().__init__(message)


class DegenerateDenominatorError(VertexModelError):
    """Raised when a rational formula is evaluated on the zero set of its denominator.

    Attributes:
        operation: Name of the operation
        factor: The vanishing factor, written out
        inputs: The arguments that made the factor vanish
    """
    def __init__(self, operation: str, factor: str, inputs: Optional[Sequence[Any]] = None):
        self.operation = operation
        self.factor = factor
        self.inputs = tuple(inputs) if inputs is not None else ()
        message = f"{operation}: denominator factor {factor} vanishes"
        if self.inputs:
            message += f" at {_fmt(self.inputs)}"
        message += (
            f"\n\nPossible causes:\n"
            f"   - The input lies on the degenerate locus of the parameterization\n"
            f"\nSuggestions:\n"
            f"   - Perturb one coordinate or draw another sample\n"
        )
        super().__init__(message)


class NotOnVarietyError(VertexModelError):
    """Raised when a point is required to lie on a variety but does not.

    Attributes:
        variety: Name of the variety (e.g. "Segre cubic S")
        point: The point that was checked
        residual: Value of the defining polynomial(s) at the point
    """
    def __init__(self, variety: str, point: Any, residual: Any = None):
        self.variety = variety
        self.point = point
        self.residual = residual
        message = f"Point {point} does not lie on {variety}"
        if residual is not None:
            message += f"\n   Residual: {residual}"
        super().__init__(message)


class ChartError(VertexModelError):
    """Raised when a point falls outside an affine chart.

    Attributes:
        point: The point
        coordinate: Name of the coordinate that must be nonzero
    """
    def __init__(self, point: Any, coordinate: str):
        self.point = point
        self.coordinate = coordinate
        super().__init__(
            f"Point {point} lies outside the affine chart {coordinate} != 0"
        )


class BasePointError(VertexModelError):
    """Raised when a rational map is evaluated on its base (indeterminacy) locus.

    Attributes:
        map_name: Name of the rational map
        point: The point where all defining polynomials vanish
    """
    def __init__(self, map_name: str, point: Any, detail: str = ""):
        self.map_name = map_name
        self.point = point
        self.detail = detail
        message = f"{map_name} is undefined at {point}: the point is in its base locus"
        if detail:
            message += f"\n   Details: {detail}"
        super().__init__(message)


class InvalidParameterError(VertexModelError):
    """Raised when a parameter lies outside its documented domain."""
    def __init__(self, name: str, value: Any, allowed: str):
        self.name = name
        self.value = value
        self.allowed = allowed
        super().__init__(f"Invalid value {value} for {name}; expected {allowed}")


class SiteCountError(VertexModelError):
    """Raised when a lattice size is outside the supported range.

    Attributes:
        sites: Requested number of sites
        minimum: Smallest allowed value
        maximum: Largest allowed value, if bounded
    """
    def __init__(self, sites: int, minimum: int = 1, maximum: Optional[int] = None):
        self.sites = sites
        self.minimum = minimum
        self.maximum = maximum
        if maximum is None:
            message = f"Number of sites must be at least {minimum}, got {sites}"
        else:
            message = f"Number of sites must lie in [{minimum}, {maximum}], got {sites}"
        super().__init__(message)


class EnumerationLimitError(SiteCountError):
    """Raised when brute-force enumeration would visit too many configurations.

    Attributes:
        sites: Requested torus size
        maximum: Largest size the enumerator accepts
    """
    def __init__(self, sites: int, maximum: int):
        super().__init__(sites, 1, maximum)
        self.args = (
            f"Brute-force enumeration of the {sites}x{sites} torus visits "
            f"2^{2 * sites * sites} edge configurations\n"
            f"   Largest supported size: {maximum}\n"
            f"\nSuggestions:\n"
            f"   - Use --method transfer for larger lattices\n",
        )


class SamplingExhaustedError(VertexModelError):
    """Raised when a sampler draws only degenerate candidates within its budget.

    Attributes:
        what: Description of the object being sampled
        attempts: Number of draws made
    """
    def __init__(self, what: str, attempts: int):
        self.what = what
        self.attempts = attempts
        super().__init__(
            f"Could not draw a non-degenerate {what} in {attempts} attempts\n"
            f"\nSuggestions:\n"
            f"   - Increase sampling.max_attempts or sampling.bound in the profile\n"
            f"   - Try another --seed\n"
        )
