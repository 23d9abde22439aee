"""Exception hierarchy shared across the toolkit."""


class PentasepError(Exception):
    """Base class for all toolkit errors."""


# --- plane graph construction / validation ---

class AsymmetricAdjacency(PentasepError):
    pass


class Disconnected(PentasepError):
    pass


class NonzeroGenus(PentasepError):
    pass


class NotCubic(PentasepError):
    pass


class BadFaceSize(PentasepError):
    def __init__(self, face_index: int, size: int):
        self.face_index = face_index
        self.size = size
        super().__init__(f"face {face_index} has size {size}, expected 5 or 6")


class WrongPentagonCount(PentasepError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"found {count} pentagons, expected 12")


# --- canonical codes / spirals ---

class NoSpiral(PentasepError):
    pass


class WindupFailure(PentasepError):
    def __init__(self, step: int, reason: str = ""):
        self.step = step
        super().__init__(f"spiral windup failed at face {step}" + (f": {reason}" if reason else ""))


class UnsupportedN(PentasepError):
    pass


# --- goldberg ---

class InvalidD(PentasepError):
    pass


# --- patches / caps ---

class NotACapBoundary(PentasepError):
    pass


class PentagonOnBoundary(PentasepError):
    pass


class NotL0Cap(PentasepError):
    pass


class ZeroParameter(PentasepError):
    pass


class BoundaryMismatch(PentasepError):
    pass


class BelowThreshold(PentasepError):
    def __init__(self, threshold: int):
        self.threshold = threshold
        super().__init__(f"hexagon count below pipeline threshold {threshold}")


class InternalVerificationFailure(PentasepError):
    pass


class TooFewPentagons(PentasepError):
    pass


class OddK(PentasepError):
    pass


# --- planar_code I/O ---

class BadHeader(PentasepError):
    pass


class TruncatedRecord(PentasepError):
    pass


class InvalidNeighborIndex(PentasepError):
    pass
