"""cone-automata - machines for positive cones of left-orderable groups."""

__version__ = "0.1.0"
