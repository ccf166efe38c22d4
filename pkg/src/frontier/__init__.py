"""Frontier-of-behaviours exploration for systems under test.

Evolves pairs of similar inputs so that one member stays on the
well-behaved side of the system under test and the other just crosses
into misbehaviour, then archives the non-redundant pairs found along
that boundary.
"""

__version__ = "0.1.0"
