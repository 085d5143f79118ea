"""Exception hierarchy.

Two broad classes matter to callers (and fix the CLI exit codes):
ValidationError for bad inputs or bad data files (exit 2), and
PhysicsDomainError for requests outside the validated physics domain
(exit 3), e.g. a laser parked on a resonance.
"""


class MagicpolError(Exception):
    """Base class for all package errors."""


class ValidationError(MagicpolError):
    """Invalid argument, configuration or data-file content."""


class DataFileError(ValidationError):
    """Atom data file cannot be parsed or fails validation.

    Carries optional file/line context for error messages.
    """

    def __init__(self, message, path=None, line=None):
        ctx = ""
        if path is not None:
            ctx = f"{path}:"
            if line is not None:
                ctx += f"{line}:"
            ctx += " "
        super().__init__(ctx + message)
        self.path = path
        self.line = line


class PhysicsDomainError(MagicpolError):
    """Request is outside the validated physics domain."""


class ResonanceGuardError(PhysicsDomainError):
    """Laser frequency too close to an atomic resonance."""

    def __init__(self, upper, lower, detuning_mhz, guard_mhz):
        super().__init__(
            f"laser within resonance guard band of {lower} -> {upper} "
            f"(|detuning| = {abs(detuning_mhz):.1f} MHz < guard {guard_mhz:.1f} MHz)"
        )
        self.upper = upper
        self.lower = lower


class NoRootError(PhysicsDomainError):
    """Root bracketing failed (e.g. no magic polarization below B_c)."""


class AdiabaticTrackingError(PhysicsDomainError):
    """Dressed-state labeling is ambiguous (degenerate or strongly mixed)."""


class ZeroVectorPolarizabilityError(PhysicsDomainError):
    """Vector polarizability vanishes; closed-form estimate undefined."""


class DegenerateInputError(ValidationError):
    """Statistically degenerate input (e.g. equal Poisson means)."""
