"""Search

Desk-scale searches for q-maximisers among the graphs that miss a tree:
exhaustive enumeration, the K_k ∨ H family scan and hill climbing.
"""
from .exhaustive import enumerate_graphs, exhaustive_search
from .family import family_graph, family_scan, inner_patterns, pattern_edges
from .hillclimb import climb, hill_climb
from .report import MODES, SearchReport, evaluate, reference_graph, reference_q

# flake8: noqa
