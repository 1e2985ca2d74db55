"""Conflict-free graph coloring toolkit.

A coloring is conflict-free on a set system when every set contains some
color exactly once.  Here the sets are closed neighborhoods N[v] (CF-CN)
or open neighborhoods N(v) (CF-ON) of a simple undirected graph.  The
package bundles an exact backtracking oracle, polynomial solvers for
bipartite / split / cograph / interval inputs, modulator-based upper
bounds and kernelization, an additive approximation for graphs close to
threshold, and the split-graph hardness gadget, behind one CLI.
"""

__version__ = "0.1.0"
