"""Thinness toolkit: exact solvers, intersection models, ordered patterns.

The package works with small simple graphs (dense integer vertex ids,
bitmask adjacency) and provides:

* ``graphs``     basic graph / digraph types, IO, small-graph enumeration
* ``ordering``   consistency checking, conflict graphs, exact thinness
* ``ceo``        order extension consistent with a given partition
* ``boxes``      rectangle intersection models M1/M2 and their predicates
* ``gridpaths``  grid path models M3/M4 and bounded-bend constructions
* ``patterns``   forbidden ordered pattern catalog and membership solvers
* ``widths``     bandwidth, pathwidth, isoperimetric peak, diameter
* ``gallery``    named example graphs with attached certificates/models
* ``sweeps``     cross-checks that run two independent routes side by side
"""

from .graphs import Graph, Digraph, Partition, Representation

__all__ = ["Graph", "Digraph", "Partition", "Representation"]
__version__ = "0.1.0"
