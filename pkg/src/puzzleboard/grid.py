"""Placeholder."""
CandidateEdge = None
LatticeComponent = None
build_forest = None
classify_neighbors = None
edge_weight = None
nearest_neighbors = None
