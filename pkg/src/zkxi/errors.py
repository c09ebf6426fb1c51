"""Exception hierarchy shared by all modules."""


class ZkxiError(Exception):
    """Base class for every error raised by :mod:`zkxi`."""


# jets
class CenterMismatch(ZkxiError, ValueError):
    pass


class DivisionByZeroJet(ZkxiError, ZeroDivisionError):
    pass


class InvalidValuation(ZkxiError, ValueError):
    pass


class BranchCut(ZkxiError, ValueError):
    pass


class OrderExceeded(ZkxiError, IndexError):
    pass


# special functions
class AtPole(ZkxiError, ValueError):
    pass


class NearPole(ZkxiError, ValueError):
    pass


class AtPoleWithoutLaurent(AtPole):
    pass


class Unsupported(ZkxiError, ValueError):
    pass


# zeta
class ParamsInsufficient(ZkxiError, ArithmeticError):
    pass


# Z_k family
class OrderBudgetExceeded(ZkxiError, ValueError):
    pass


class LatticeTooClose(ZkxiError, ValueError):
    pass


class BranchAmbiguity(ZkxiError, ValueError):
    pass


class CenterUnsupported(ZkxiError, ValueError):
    pass


# xi_k
class CancellationFailure(ZkxiError, ArithmeticError):
    pass


# zeros
class RangeInvalid(ZkxiError, ValueError):
    pass


class AuditFailed(ZkxiError):
    """Raised by strict scans; the flagged list is kept on ``zerolist``."""

    def __init__(self, message, zerolist=None):
        super().__init__(message)
        self.zerolist = zerolist


class CoverageInsufficient(ZkxiError, ValueError):
    pass


class RangeMismatch(ZkxiError, ValueError):
    pass


class TooCloseToZero(ZkxiError, ValueError):
    pass


class AtZero(ZkxiError, ValueError):
    pass


# config
class ParseError(ZkxiError, ValueError):
    def __init__(self, message, key_path=""):
        super().__init__(f"{key_path}: {message}" if key_path else message)
        self.key_path = key_path


class RangeError(ZkxiError, ValueError):
    def __init__(self, message, key_path=""):
        super().__init__(f"{key_path}: {message}" if key_path else message)
        self.key_path = key_path
