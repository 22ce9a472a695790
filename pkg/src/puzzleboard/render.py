"""Placeholder."""
BoardGeometry = None
board_geometry = None
export_svg = None
ground_truth = None
homography_for_view = None
render_view = None
