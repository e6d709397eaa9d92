"""Exception hierarchy shared by every module of the package."""


class SemiflowerError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetMismatch(SemiflowerError):
    pass


class InvalidAutomaton(SemiflowerError):
    pass


class NotTrim(SemiflowerError):
    pass


class NotMonoidal(SemiflowerError):
    pass


class CycleAvoidsRoot(SemiflowerError):
    """A cycle of the digraph misses the initial-final state.

    ``witness`` holds the offending cycle as a list of state ids, first
    state repeated at the end.
    """

    def __init__(self, witness):
        self.witness = list(witness)
        super().__init__(f"cycle avoids the root state: {' -> '.join(map(str, self.witness))}")


class NotDeterministic(SemiflowerError):
    pass


class BudgetExceeded(SemiflowerError):
    def __init__(self, cap, what="simple cycles"):
        self.cap = cap
        super().__init__(f"more than {cap} {what}; raise the enumeration cap to continue")


class BpiCountMismatch(SemiflowerError):
    pass


class CycleDetected(SemiflowerError):
    pass


class InvalidOrder(SemiflowerError):
    pass


class UndefinedRank(SemiflowerError):
    pass


class ParseError(SemiflowerError):
    """Input file problem; carries the 1-based line number when known."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class UnknownLetter(ParseError):
    def __init__(self, char, line=None, path=None):
        self.char = char
        super().__init__(f"unknown letter {char!r}", line=line, path=path)


class EmptyAlphabet(ParseError):
    pass


class EmptyWord(ParseError):
    pass
