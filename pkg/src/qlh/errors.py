"""Exception types raised by the qlh library.

Every mathematical failure carries enough context (offending index, exact
value) for the CLI to report it without a traceback.
"""


class QLHError(Exception):
    """Base class for all library errors."""


class RootOfUnity(QLHError, ValueError):
    def __init__(self, value):
        super().__init__(f"q = {value} is excluded (0, 1 and -1 are roots of unity or zero)")
        self.value = value


class ZeroDilation(QLHError, ValueError):
    def __init__(self):
        super().__init__("dilation factor must be nonzero")


class DivisionByZeroPoly(QLHError, ZeroDivisionError):
    def __init__(self):
        super().__init__("polynomial division by the zero polynomial")


class InsufficientOrder(QLHError):
    def __init__(self, needed, available, what="moment"):
        super().__init__(f"{what} index {needed} requested but only order {available} is available")
        self.needed = needed
        self.available = available


class OrderMismatch(QLHError):
    def __init__(self, left, right):
        super().__init__(f"forms have different orders ({left} != {right})")


class NonInvertible(QLHError):
    def __init__(self):
        super().__init__("form with vanishing zeroth moment has no inverse")


class NotRegular(QLHError):
    def __init__(self, n, value=0):
        super().__init__(f"form is not regular: Hankel determinant vanishes at n = {n}")
        self.n = n
        self.value = value


class InsufficientCoefficients(QLHError):
    def __init__(self, what, index):
        super().__init__(f"recurrence coefficient {what}_{index} is required but missing")
        self.what = what
        self.index = index


class NotARoot(QLHError):
    def __init__(self, c, value):
        super().__init__(f"{c} is not a root of phi (phi({c}) = {value})")
        self.c = c
        self.value = value


class NonAdmissible(QLHError):
    def __init__(self, n):
        super().__init__(f"leading coefficient of the moment recursion vanishes at step n = {n}")
        self.n = n


class MissingSeed(QLHError):
    def __init__(self, n):
        super().__init__(f"moment {n} is not determined by the equation and no seed was given")
        self.n = n


class InconsistentSeeds(QLHError):
    def __init__(self, n, value):
        super().__init__(f"seed moments violate the equation at n = {n} (residual {value})")
        self.n = n
        self.value = value


class EmptyOverlap(QLHError):
    def __init__(self):
        super().__init__("series have no common range of valid powers")


class DegenerateLeading(QLHError):
    def __init__(self, what="Phi"):
        super().__init__(f"transformed {what} vanishes identically; cannot normalize to monic")


class InvalidParameter(QLHError, ValueError):
    pass


class ParseError(QLHError, ValueError):
    def __init__(self, message, line=None, column=None, path=None):
        where = []
        if path:
            where.append(path)
        if line is not None:
            where.append(f"line {line} column {column}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.column = column
        self.path = path
