"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`BirkhoffError`, so callers (and the CLI) can catch one type.
"""


class BirkhoffError(Exception):
    pass


class ParseError(BirkhoffError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownLabelError(BirkhoffError, KeyError):
    def __init__(self, label):
        super().__init__(f"unknown label {label!r}")
        self.label = label

    def __str__(self):
        return self.args[0]


class DuplicateLabelError(BirkhoffError):
    def __init__(self, label):
        super().__init__(f"duplicate label {label!r}")
        self.label = label


class CycleError(BirkhoffError):
    """The cover relation closes into a cycle, so it is not a partial order."""

    def __init__(self, pair):
        a, b = pair
        super().__init__(f"{a!r} and {b!r} lie on a cycle of covers")
        self.pair = pair


class InvalidPosetError(BirkhoffError):
    pass


class BudgetExceeded(BirkhoffError):
    def __init__(self, budget, what="ideals"):
        super().__init__(f"more than {budget} {what}; raise the budget to continue")
        self.budget = budget


class NonterminatingFrontier(BirkhoffError):
    def __init__(self, bound):
        super().__init__(
            f"an ideal has more than {bound} addable elements; "
            "the base poset looks like it has an infinite antichain"
        )
        self.bound = bound


class EmptyPoset(BirkhoffError):
    pass


class EmptyStructure(BirkhoffError):
    pass


class NotALattice(BirkhoffError):
    def __init__(self, pair, kind="join"):
        a, b = pair
        bound = "least upper" if kind == "join" else "greatest lower"
        super().__init__(f"{a!r} and {b!r} have no unique {bound} bound")
        self.pair = pair
        self.kind = kind


class NotDistributive(BirkhoffError):
    def __init__(self, triple):
        super().__init__("lattice is not distributive, witness (a, b, c) = %r" % (triple,))
        self.triple = triple


class NoDecomposition(BirkhoffError):
    pass


class BottomNotPrime(BirkhoffError):
    pass


class NotComparable(BirkhoffError):
    def __init__(self, x, y):
        super().__init__(f"{x!r} is not below {y!r}")
        self.pair = (x, y)


class NotAnIdeal(BirkhoffError):
    pass


class HostMismatch(BirkhoffError):
    pass


class NotAntichain(BirkhoffError):
    pass


class NotJoinIrreducible(BirkhoffError):
    pass


class StrictIncreaseViolated(BirkhoffError):
    """Prefix joins of an antichain failed to increase strictly.

    ``chain`` holds the prefix joins computed so far and ``step`` the
    position where the join did not grow.
    """

    def __init__(self, chain, step):
        super().__init__(
            f"prefix join did not grow at step {step}: {' <= '.join(chain)}"
        )
        self.chain = list(chain)
        self.step = step
