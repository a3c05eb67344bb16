"""kitecolor - list edge and total coloring of kite-free planar graphs."""

__version__ = "0.1.0"
