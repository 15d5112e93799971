class SelfSimError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "error"


class InputError(SelfSimError):
    code = "input_error"


class CapExceeded(SelfSimError):
    code = "cap_exceeded"


class UndefinedTransition(SelfSimError):
    code = "undefined_transition"

    def __init__(self, state, letter):
        super().__init__(f"no transition for state {state!r} on letter {letter!r}")
        self.state = state
        self.letter = letter


class NotInvertible(InputError):
    code = "not_invertible"

    def __init__(self, state):
        super().__init__(f"state {state!r} is not invertible")
        self.state = state


class NonPeriodicResidual(CapExceeded):
    code = "non_periodic_residual"


class BisimulationCapExceeded(CapExceeded):
    code = "bisimulation_cap"


class NotContractingUpToBound(CapExceeded):
    code = "not_contracting_up_to_bound"

    def __init__(self, cap, size=None, kind="rounds"):
        msg = f"nucleus candidate set still growing at the {kind} cap {cap}"
        if size is not None:
            msg += f" ({size} classes)"
        super().__init__(msg)
        self.cap = cap
        self.kind = kind


class NotBounded(InputError):
    code = "not_bounded"


class DomainMismatch(InputError):
    code = "domain_mismatch"


class MissingColour(InputError):
    code = "missing_colour"

    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} has no colour")
        self.vertex = vertex


class UnknownName(InputError):
    code = "unknown_name"


class ExtentTooLarge(CapExceeded):
    code = "extent_too_large"


class DisconnectedBlackSet(InputError):
    code = "disconnected_black_set"


class UnknownBase(InputError):
    code = "unknown_base"
