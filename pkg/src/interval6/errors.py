"""Shared exception types."""


class InvariantError(RuntimeError):
    """A structural guarantee the algorithms rely on was broken.

    Raised when a state that the underlying theory rules out is observed
    anyway (an odd cycle in a graph that must be bipartite, a constructed
    coloring that fails its own verification, ...). Seeing this means a
    bug, not bad input.
    """


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of its node budget before deciding."""
