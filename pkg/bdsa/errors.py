"""Exception hierarchy for bdsa.

Input problems derive from :class:`InputError` (CLI exit code 2), internal
inconsistencies between independent decision routes derive from
:class:`CrossCheckMismatch` (exit code 3). Everything else is an
:class:`AnalysisError` raised when an operation's precondition is violated.
"""

from typing import Dict, Optional


class BDSAError(Exception):
    """Base class. ``str()`` renders ``"<ClassName> <detail>"``."""

    def __init__(self, detail: str = "", line: Optional[int] = None):
        self.detail = detail
        self.line = line
        super().__init__(str(self))

    def with_line(self, line: int) -> "BDSAError":
        self.line = line
        self.args = (str(self),)
        return self

    def __str__(self):
        text = type(self).__name__
        if self.detail:
            text = f"{text} {self.detail}"
        if self.line is not None:
            text = f"line {self.line}: {text}"
        return text


""" input """


class InputError(BDSAError):
    pass


class MalformedSyntax(InputError):
    def __init__(self, detail: str = "", position: Optional[int] = None, line=None):
        self.position = position
        if position is not None:
            detail = f"{detail} at column {position + 1}".strip()
        super().__init__(detail, line)


class UnknownAtom(InputError):
    def __init__(self, atom: str, line=None):
        self.atom = atom
        super().__init__(atom, line)


class UnknownLabel(InputError):
    def __init__(self, label: str, line=None):
        self.label = label
        super().__init__(label, line)


class DuplicateDeclaration(InputError):
    pass


class NotDisjoint(InputError):
    def __init__(self, atom: str, first: str, second: str, line=None):
        self.atom, self.first, self.second = atom, first, second
        super().__init__(f"{atom} lies in the images of {first} and {second}", line)


class IdealTooSmall(InputError):
    def __init__(self, label: str, line=None):
        self.label = label
        super().__init__(label, line)


class JNotRegular(InputError):
    pass


class TooManyAtoms(InputError):
    pass


""" analysis """


class AnalysisError(BDSAError):
    pass


class NotHereditary(AnalysisError):
    pass


class InvalidTail(AnalysisError):
    pass


class TooLarge(AnalysisError):
    pass


class RelativeJNotSupported(AnalysisError):
    pass


""" cross-checks """


class CrossCheckMismatch(BDSAError):
    """Two routes that must agree returned different answers."""

    def __init__(self, subject: str, verdicts: Optional[Dict[str, object]] = None):
        self.subject = subject
        self.verdicts = dict(verdicts or {})
        rendered = ", ".join(f"{k}={v}" for k, v in self.verdicts.items())
        super().__init__(f"{subject}: {rendered}" if rendered else subject)


class TailAxiomFailure(CrossCheckMismatch):
    pass
