"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CirculantError(Exception):
    """Base class for all errors raised by :mod:`circulant`."""


class InvalidSpec(CirculantError, ValueError):
    """A generator set does not describe a valid undirected circulant graph."""


class DisconnectedGraph(CirculantError):
    """The connection set does not generate the whole cyclic group."""


class NegativeDefect(CirculantError):
    """A distance level is larger than the Abelian Cayley bound allows.

    The bound is a theorem, so this always points at a bug in the BFS or the
    bound itself rather than at a property of the graph.
    """


class UnknownFamily(CirculantError, KeyError):
    """No tabulated family exists for the requested (degree, diameter, class)."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class BelowThreshold(CirculantError, ValueError):
    """The diameter is below the validity threshold of the order formula."""


class RangeTooLarge(CirculantError):
    """The candidate space of a search exceeds the configured budget."""
